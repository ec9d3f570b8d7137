/**
 * Strict readers for the report CSV schemas.
 *
 * Every violation throws a SchemaError naming the offending file and,
 * when applicable, the column. The charts consume only what these
 * readers return, so a render can never silently reinterpret a file.
 */

import * as fs from 'node:fs';
import * as path from 'node:path';

export class SchemaError extends Error {
  constructor(
    public readonly file: string,
    public readonly column: string | null,
    detail: string,
  ) {
    super(
      column === null
        ? `${file}: ${detail}`
        : `${file}, column '${column}': ${detail}`,
    );
    this.name = 'SchemaError';
  }
}

export interface DegreeHistRow {
  degree: number;
  count: number;
}

export interface NgramRow {
  n: number;
  items: number[];
  count: number;
}

function readRows(file: string, columns: string[]): string[][] {
  if (!fs.existsSync(file)) {
    throw new SchemaError(file, null, 'file is missing');
  }
  const text = fs.readFileSync(file, 'utf-8');
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(file, null, 'file is empty');
  }
  const header = lines[0].split(',');
  for (const column of columns) {
    if (!header.includes(column)) {
      throw new SchemaError(file, column, 'missing from header');
    }
  }
  if (header.length !== columns.length) {
    throw new SchemaError(file, null, `expected header ${columns.join(',')}, got ${lines[0]}`);
  }
  return lines.slice(1).map((line, i) => {
    const cells = line.split(',');
    if (cells.length !== columns.length) {
      throw new SchemaError(file, null, `row ${i + 2} has ${cells.length} fields, expected ${columns.length}`);
    }
    return cells;
  });
}

function toCount(file: string, column: string, cell: string): number {
  if (!/^\d+$/.test(cell)) {
    throw new SchemaError(file, column, `expected a non-negative integer, got '${cell}'`);
  }
  return Number(cell);
}

export function loadDegreeHist(file: string): DegreeHistRow[] {
  return readRows(file, ['degree', 'count']).map(([degree, count]) => ({
    degree: toCount(file, 'degree', degree),
    count: toCount(file, 'count', count),
  }));
}

export function loadNgrams(file: string): NgramRow[] {
  return readRows(file, ['n', 'items', 'count']).map(([n, items, count]) => ({
    n: toCount(file, 'n', n),
    items: items.split('|').map((item) => toCount(file, 'items', item)),
    count: toCount(file, 'count', count),
  }));
}

export interface ReportInputs {
  degreeHist: DegreeHistRow[];
  ngrams: Map<number, NgramRow[]>;
  dotText: string | null;
}

/** Load everything render-all consumes from a report directory. */
export function loadReportDir(dir: string, ngramSizes: number[] = [1, 2, 3]): ReportInputs {
  const degreeHist = loadDegreeHist(path.join(dir, 'degree_hist.csv'));
  const ngrams = new Map<number, NgramRow[]>();
  for (const n of ngramSizes) {
    ngrams.set(n, loadNgrams(path.join(dir, `ngram_${n}.csv`)));
  }
  const dotFile = path.join(dir, 'traversal.dot');
  const dotText = fs.existsSync(dotFile) ? fs.readFileSync(dotFile, 'utf-8') : null;
  return { degreeHist, ngrams, dotText };
}
