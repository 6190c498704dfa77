/**
 * Sparse COO index tables backed by typed arrays.
 *
 * A pair table is a [2, N] coordinate structure (every entry has implicit
 * value 1). Lookups go through lazily built per-column index maps rather
 * than per-row scans, so a query costs one hash lookup after the first
 * touch of a column.
 */

export class PairTable {
  readonly first: Int32Array;
  readonly second: Int32Array;

  private byFirst: Map<number, number[]> | null = null;
  private bySecond: Map<number, number[]> | null = null;

  constructor(first: Int32Array, second: Int32Array) {
    if (first.length !== second.length) {
      throw new Error(`column length mismatch: ${first.length} vs ${second.length}`);
    }
    this.first = first;
    this.second = second;
  }

  get length(): number {
    return this.first.length;
  }

  get shape(): [number, number] {
    return [2, this.first.length];
  }

  rows(): Array<[number, number]> {
    const out: Array<[number, number]> = [];
    for (let i = 0; i < this.first.length; i++) {
      out.push([this.first[i], this.second[i]]);
    }
    return out;
  }

  private static index(keys: Int32Array, values: Int32Array): Map<number, number[]> {
    const map = new Map<number, number[]>();
    for (let i = 0; i < keys.length; i++) {
      const k = keys[i];
      const bucket = map.get(k);
      if (bucket === undefined) {
        map.set(k, [values[i]]);
      } else {
        bucket.push(values[i]);
      }
    }
    return map;
  }

  /** All second-column values paired with `first` (set semantics). */
  secondsOf(first: number): Set<number> {
    if (this.byFirst === null) {
      this.byFirst = PairTable.index(this.first, this.second);
    }
    return new Set(this.byFirst.get(first) ?? []);
  }

  /** All first-column values paired with `second` (set semantics). */
  firstsOf(second: number): Set<number> {
    if (this.bySecond === null) {
      this.bySecond = PairTable.index(this.second, this.first);
    }
    return new Set(this.bySecond.get(second) ?? []);
  }

  hasSecond(second: number): boolean {
    if (this.bySecond === null) {
      this.bySecond = PairTable.index(this.second, this.first);
    }
    return this.bySecond.has(second);
  }

  maxFirst(): number {
    let max = -1;
    for (const v of this.first) if (v > max) max = v;
    return max;
  }

  maxSecond(): number {
    let max = -1;
    for (const v of this.second) if (v > max) max = v;
    return max;
  }
}

/** A [3, N] integer triple table: subject, property, object ids. */
export class TripleTable {
  readonly subjects: Int32Array;
  readonly properties: Int32Array;
  readonly objects: Int32Array;

  constructor(subjects: Int32Array, properties: Int32Array, objects: Int32Array) {
    if (subjects.length !== properties.length || subjects.length !== objects.length) {
      throw new Error("column length mismatch in triple table");
    }
    this.subjects = subjects;
    this.properties = properties;
    this.objects = objects;
  }

  get length(): number {
    return this.subjects.length;
  }

  get shape(): [number, number] {
    return [3, this.subjects.length];
  }

  rows(): Array<[number, number, number]> {
    const out: Array<[number, number, number]> = [];
    for (let i = 0; i < this.length; i++) {
      out.push([this.subjects[i], this.properties[i], this.objects[i]]);
    }
    return out;
  }
}

export function parseIntColumns(text: string, columns: number, file: string): Int32Array[] {
  const lines = text.split("\n");
  let count = 0;
  for (const line of lines) if (line.length > 0) count++;
  const cols = Array.from({ length: columns }, () => new Int32Array(count));
  let row = 0;
  for (const line of lines) {
    if (line.length === 0) continue;
    const parts = line.split("\t");
    if (parts.length !== columns) {
      throw new Error(`${file}: expected ${columns} columns, got ${parts.length}`);
    }
    for (let c = 0; c < columns; c++) {
      const v = Number(parts[c]);
      if (!Number.isInteger(v)) {
        throw new Error(`${file}: non-integer cell ${parts[c]} in row ${row}`);
      }
      cols[c][row] = v;
    }
    row++;
  }
  return cols;
}
