/**
 * Bundle directory access: manifest, checksums, id maps.
 */

import { createHash } from "node:crypto";
import { existsSync, readFileSync } from "node:fs";
import { join } from "node:path";

export interface Manifest {
  index_base: number;
  counts: { individuals: number; properties: number; classes: number };
  rows: Record<string, number>;
  files: string[];
  checksums: Record<string, string>;
  split?: { seed: number; ratios: number[] };
  [key: string]: unknown;
}

export class MissingFileError extends Error {}
export class ChecksumError extends Error {}
export class IndexRangeError extends Error {}

export function readManifest(dir: string): Manifest {
  const path = join(dir, "manifest.json");
  if (!existsSync(path)) {
    throw new MissingFileError(`manifest.json not found in ${dir}`);
  }
  const manifest = JSON.parse(readFileSync(path, "utf-8")) as Manifest;
  for (const key of ["counts", "rows", "checksums"]) {
    if (!(key in manifest)) {
      throw new Error(`manifest.json missing key ${key}`);
    }
  }
  return manifest;
}

/** Read one bundle file, verifying existence and its manifest checksum. */
export function readVerified(dir: string, name: string, manifest: Manifest): string {
  const path = join(dir, name);
  if (!existsSync(path)) {
    throw new MissingFileError(`${name} not found in ${dir}`);
  }
  const bytes = readFileSync(path);
  const expected = manifest.checksums[name];
  if (expected !== undefined) {
    const got = createHash("sha256").update(bytes).digest("hex");
    if (got !== expected) {
      throw new ChecksumError(`${name}: checksum mismatch (expected ${expected}, got ${got})`);
    }
  }
  return bytes.toString("utf-8");
}

export interface IdMaps {
  individualIds: Map<string, number>;
  propertyIds: Map<string, number>;
  classIds: Map<string, number>;
  individualIris: Map<number, string>;
  propertyIris: Map<number, string>;
  classIris: Map<number, string>;
}

function parseIdMap(text: string, file: string): [Map<string, number>, Map<number, string>] {
  const forward = new Map<string, number>();
  const inverse = new Map<number, string>();
  for (const line of text.split("\n")) {
    if (line.length === 0) continue;
    const tab = line.indexOf("\t");
    if (tab < 0) throw new Error(`${file}: malformed line ${line}`);
    const id = Number(line.slice(0, tab));
    const iri = line.slice(tab + 1);
    forward.set(iri, id);
    inverse.set(id, iri);
  }
  return [forward, inverse];
}

export function readIdMaps(dir: string, manifest: Manifest): IdMaps {
  const [individualIds, individualIris] = parseIdMap(
    readVerified(dir, "entity_ids.tsv", manifest),
    "entity_ids.tsv",
  );
  const [propertyIds, propertyIris] = parseIdMap(
    readVerified(dir, "relation_ids.tsv", manifest),
    "relation_ids.tsv",
  );
  const [classIds, classIris] = parseIdMap(
    readVerified(dir, "class_ids.tsv", manifest),
    "class_ids.tsv",
  );
  return { individualIds, propertyIds, classIds, individualIris, propertyIris, classIris };
}
