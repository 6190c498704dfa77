/**
 * Example: turn a bundle's train.txt into the id-triple arrays a standard
 * embedding-framework loader consumes.
 *
 *   npm run example -- path/to/bundle
 *
 * The produced Int32Arrays are drop-in factory inputs for tensor libraries
 * (e.g. tf.tensor2d([...subjects, ...], [3, n], "int32")).
 */

import { join } from "node:path";
import { load, readTripleTextFile } from "../src/index.js";

function main(): void {
  const dir = process.argv[2];
  if (!dir) {
    console.error("usage: load_triples <bundle-dir>");
    process.exit(1);
  }
  const dataset = load(dir);
  const text = readTripleTextFile(join(dir, "train.txt"));

  const n = text.subjects.length;
  const heads = new Int32Array(n);
  const rels = new Int32Array(n);
  const tails = new Int32Array(n);
  for (let i = 0; i < n; i++) {
    heads[i] = dataset.idMaps.individualIds.get(text.subjects[i])!;
    rels[i] = dataset.idMaps.propertyIds.get(text.properties[i])!;
    tails[i] = dataset.idMaps.individualIds.get(text.objects[i])!;
  }

  console.log(`loaded ${n} training triples from ${dir}`);
  console.log(
    `entities=${dataset.counts.individuals} relations=${dataset.counts.properties} ` +
      `classes=${dataset.counts.classes}`,
  );
  console.log(`first triple: (${heads[0]}, ${rels[0]}, ${tails[0]})`);
  const sample = heads.length > 0 ? dataset.classesOf(heads[0]) : new Set<number>();
  console.log(`classes of first head: {${[...sample].sort((a, b) => a - b).join(", ")}}`);
}

main();
