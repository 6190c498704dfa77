/**
 * Reader for the IRI-form split files (train.txt / valid.txt / test.txt):
 * one tab-separated s/p/o IRI triple per line, the shape standard
 * embedding-framework triple loaders ingest directly.
 */

import { readFileSync } from "node:fs";

export interface IriTriples {
  subjects: string[];
  properties: string[];
  objects: string[];
}

export function readTripleTextFile(path: string): IriTriples {
  const subjects: string[] = [];
  const properties: string[] = [];
  const objects: string[] = [];
  for (const line of readFileSync(path, "utf-8").split("\n")) {
    if (line.length === 0) continue;
    const parts = line.split("\t");
    if (parts.length !== 3) {
      throw new Error(`${path}: malformed triple line: ${line}`);
    }
    subjects.push(parts[0]);
    properties.push(parts[1]);
    objects.push(parts[2]);
  }
  return { subjects, properties, objects };
}
