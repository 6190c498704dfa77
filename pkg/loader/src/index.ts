export { PairTable, TripleTable, parseIntColumns } from "./table.js";
export {
  ChecksumError,
  IndexRangeError,
  MissingFileError,
  readIdMaps,
  readManifest,
  readVerified,
} from "./bundle.js";
export type { IdMaps, Manifest } from "./bundle.js";
export { LoadedDataset, load } from "./dataset.js";
export type { LoadOptions, SplitName } from "./dataset.js";
export { readTripleTextFile } from "./triples_text.js";
