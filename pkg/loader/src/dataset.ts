/**
 * LoadedDataset: a bundle's index tables plus traversal utilities.
 *
 * Everything is read-only after load. Transitive closures are computed on
 * demand and memoized per class; the caches live behind synchronous method
 * calls, so concurrent readers on the single JS thread always observe a
 * complete entry.
 */

import {
  ChecksumError,
  IdMaps,
  IndexRangeError,
  Manifest,
  MissingFileError,
  readIdMaps,
  readManifest,
  readVerified,
} from "./bundle.js";
import { PairTable, TripleTable, parseIntColumns } from "./table.js";

export type SplitName = "train" | "valid" | "test";

export interface LoadOptions {
  /** Verify every table checksum during load (default true). */
  verifyChecksums?: boolean;
}

export class LoadedDataset {
  readonly relations: Record<SplitName, TripleTable>;
  readonly types: PairTable;
  readonly taxonomy: PairTable;
  readonly domain: PairTable;
  readonly range: PairTable;
  readonly subproperty: PairTable;
  readonly idMaps: IdMaps;
  readonly manifest: Manifest;

  private superClosure = new Map<number, Set<number>>();
  private subClosure = new Map<number, Set<number>>();

  constructor(
    relations: Record<SplitName, TripleTable>,
    types: PairTable,
    taxonomy: PairTable,
    domain: PairTable,
    range: PairTable,
    subproperty: PairTable,
    idMaps: IdMaps,
    manifest: Manifest,
  ) {
    this.relations = relations;
    this.types = types;
    this.taxonomy = taxonomy;
    this.domain = domain;
    this.range = range;
    this.subproperty = subproperty;
    this.idMaps = idMaps;
    this.manifest = manifest;
  }

  get counts(): { individuals: number; properties: number; classes: number } {
    return this.manifest.counts;
  }

  private checkClassId(id: number): void {
    if (!Number.isInteger(id) || id < 0 || id >= this.manifest.counts.classes) {
      throw new IndexRangeError(`class id ${id} out of range`);
    }
  }

  /** All class ids the individual is typed with. */
  classesOf(individualId: number): Set<number> {
    if (
      !Number.isInteger(individualId) ||
      individualId < 0 ||
      individualId >= this.manifest.counts.individuals
    ) {
      throw new IndexRangeError(`individual id ${individualId} out of range`);
    }
    return this.types.secondsOf(individualId);
  }

  superclassesOf(classId: number, transitive = false): Set<number> {
    this.checkClassId(classId);
    if (!transitive) {
      return this.taxonomy.secondsOf(classId);
    }
    return this.closure(classId, this.superClosure, (c) => this.taxonomy.secondsOf(c));
  }

  subclassesOf(classId: number, transitive = false): Set<number> {
    this.checkClassId(classId);
    if (!transitive) {
      return this.taxonomy.firstsOf(classId);
    }
    return this.closure(classId, this.subClosure, (c) => this.taxonomy.firstsOf(c));
  }

  /** A class is a leaf when no class has it as a direct superclass. */
  isLeaf(classId: number): boolean {
    this.checkClassId(classId);
    return !this.taxonomy.hasSecond(classId);
  }

  domainsOf(propertyId: number): Set<number> {
    this.checkPropertyId(propertyId);
    return this.domain.secondsOf(propertyId);
  }

  rangesOf(propertyId: number): Set<number> {
    this.checkPropertyId(propertyId);
    return this.range.secondsOf(propertyId);
  }

  private checkPropertyId(id: number): void {
    if (!Number.isInteger(id) || id < 0 || id >= this.manifest.counts.properties) {
      throw new IndexRangeError(`property id ${id} out of range`);
    }
  }

  private closure(
    start: number,
    cache: Map<number, Set<number>>,
    step: (c: number) => Set<number>,
  ): Set<number> {
    const cached = cache.get(start);
    if (cached !== undefined) {
      return new Set(cached);
    }
    const reached = new Set<number>();
    const stack = [...step(start)];
    while (stack.length > 0) {
      const c = stack.pop()!;
      if (reached.has(c)) continue;
      reached.add(c);
      const next = cache.get(c);
      if (next !== undefined) {
        for (const d of next) reached.add(d);
        continue;
      }
      for (const d of step(c)) {
        if (!reached.has(d)) stack.push(d);
      }
    }
    reached.delete(start);
    cache.set(start, reached);
    return new Set(reached);
  }
}

const TABLE_COLUMNS: Array<[string, string, number]> = [
  ["train", "train.tsv", 3],
  ["valid", "valid.tsv", 3],
  ["test", "test.tsv", 3],
  ["types", "types.tsv", 2],
  ["taxonomy", "taxonomy.tsv", 2],
  ["domain", "domain.tsv", 2],
  ["range", "range.tsv", 2],
  ["subproperty", "subprop.tsv", 2],
];

/** Load a bundle directory; checksum-verifies every table against the manifest. */
export function load(dir: string, options: LoadOptions = {}): LoadedDataset {
  const manifest = readManifest(dir);
  const verify = options.verifyChecksums ?? true;

  const raw: Record<string, Int32Array[]> = {};
  for (const [key, file, columns] of TABLE_COLUMNS) {
    const text = verify
      ? readVerified(dir, file, manifest)
      : readVerified(dir, file, { ...manifest, checksums: {} });
    raw[key] = parseIntColumns(text, columns, file);
    const expectedRows = manifest.rows[key];
    if (expectedRows !== undefined && raw[key][0].length !== expectedRows) {
      throw new Error(
        `${file}: ${raw[key][0].length} rows but manifest declares ${expectedRows}`,
      );
    }
  }

  const relations: Record<SplitName, TripleTable> = {
    train: new TripleTable(raw.train[0], raw.train[1], raw.train[2]),
    valid: new TripleTable(raw.valid[0], raw.valid[1], raw.valid[2]),
    test: new TripleTable(raw.test[0], raw.test[1], raw.test[2]),
  };
  const dataset = new LoadedDataset(
    relations,
    new PairTable(raw.types[0], raw.types[1]),
    new PairTable(raw.taxonomy[0], raw.taxonomy[1]),
    new PairTable(raw.domain[0], raw.domain[1]),
    new PairTable(raw.range[0], raw.range[1]),
    new PairTable(raw.subproperty[0], raw.subproperty[1]),
    readIdMaps(dir, manifest),
    manifest,
  );
  validateBounds(dataset);
  return dataset;
}

function validateBounds(ds: LoadedDataset): void {
  const { individuals, properties, classes } = ds.manifest.counts;
  const base = ds.manifest.index_base ?? 0;
  const check = (value: number, cardinality: number, what: string) => {
    if (value - base >= cardinality || value < base) {
      throw new IndexRangeError(`${what} index ${value} out of range (${cardinality})`);
    }
  };
  for (const split of ["train", "valid", "test"] as SplitName[]) {
    const t = ds.relations[split];
    for (let i = 0; i < t.length; i++) {
      check(t.subjects[i], individuals, `${split} subject`);
      check(t.properties[i], properties, `${split} property`);
      check(t.objects[i], individuals, `${split} object`);
    }
  }
  for (let i = 0; i < ds.types.length; i++) {
    check(ds.types.first[i], individuals, "types individual");
    check(ds.types.second[i], classes, "types class");
  }
  for (let i = 0; i < ds.taxonomy.length; i++) {
    check(ds.taxonomy.first[i], classes, "taxonomy class");
    check(ds.taxonomy.second[i], classes, "taxonomy superclass");
  }
  for (let i = 0; i < ds.domain.length; i++) {
    check(ds.domain.first[i], properties, "domain property");
    check(ds.domain.second[i], classes, "domain class");
  }
  for (let i = 0; i < ds.range.length; i++) {
    check(ds.range.first[i], properties, "range property");
    check(ds.range.second[i], classes, "range class");
  }
  for (let i = 0; i < ds.subproperty.length; i++) {
    check(ds.subproperty.first[i], properties, "subproperty sub");
    check(ds.subproperty.second[i], properties, "subproperty super");
  }
}

export { ChecksumError, IndexRangeError, MissingFileError };
