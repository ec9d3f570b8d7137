import { describe, expect, it } from 'vitest';

import {
  binPowersOfTwo,
  degreeChartOptions,
  hasMonotoneTail,
  rankFrequencyOptions,
  renderSvg,
} from '../src/charts';
import { DegreeHistRow, NgramRow } from '../src/schema';

const HEAVY_TAIL: DegreeHistRow[] = [
  { degree: 0, count: 3 },
  { degree: 1, count: 900 },
  { degree: 2, count: 400 },
  { degree: 3, count: 250 },
  { degree: 5, count: 120 },
  { degree: 9, count: 40 },
  { degree: 17, count: 12 },
  { degree: 40, count: 3 },
  { degree: 200, count: 1 },
];

describe('binPowersOfTwo', () => {
  it('groups degrees into [2^i, 2^(i+1)) bins', () => {
    expect(binPowersOfTwo(HEAVY_TAIL)).toEqual([
      { lo: 1, hi: 2, vertices: 900 },
      { lo: 2, hi: 4, vertices: 650 },
      { lo: 4, hi: 8, vertices: 120 },
      { lo: 8, hi: 16, vertices: 40 },
      { lo: 16, hi: 32, vertices: 12 },
      { lo: 32, hi: 64, vertices: 3 },
      { lo: 128, hi: 256, vertices: 1 },
    ]);
  });

  it('keeps degree zero out of the bins', () => {
    expect(binPowersOfTwo([{ degree: 0, count: 7 }])).toEqual([]);
  });
});

describe('hasMonotoneTail', () => {
  it('accepts a heavy-tailed histogram', () => {
    expect(hasMonotoneTail(binPowersOfTwo(HEAVY_TAIL))).toBe(true);
  });

  it('rejects a rebounding tail', () => {
    const bins = binPowersOfTwo([
      { degree: 1, count: 10 },
      { degree: 2, count: 2 },
      { degree: 4, count: 9 },
    ]);
    expect(hasMonotoneTail(bins)).toBe(false);
  });
});

describe('degreeChartOptions', () => {
  it('uses the CSV rows as the raw series, unaggregated', () => {
    const options = degreeChartOptions(HEAVY_TAIL, false);
    const series = options.series as Array<{ name: string; data: number[][] }>;
    expect(series[0].data).toEqual(HEAVY_TAIL.map((r) => [r.degree, r.count]));
  });

  it('drops only degree zero in log-log mode', () => {
    const options = degreeChartOptions(HEAVY_TAIL, true);
    const series = options.series as Array<{ data: number[][] }>;
    expect(series[0].data).toEqual(
      HEAVY_TAIL.filter((r) => r.degree > 0).map((r) => [r.degree, r.count]),
    );
  });

  it('renders a single-row histogram without crashing', () => {
    const svg = renderSvg(degreeChartOptions([{ degree: 1, count: 2 }], true));
    expect(svg.startsWith('<svg')).toBe(true);
    expect(svg.length).toBeGreaterThan(100);
  });
});

describe('rankFrequencyOptions', () => {
  it('maps rank to count in CSV order', () => {
    const rows: NgramRow[] = [
      { n: 2, items: [0, 1], count: 9 },
      { n: 2, items: [1, 2], count: 4 },
      { n: 2, items: [2, 3], count: 1 },
    ];
    const options = rankFrequencyOptions(rows, 2);
    const series = options.series as Array<{ data: number[][] }>;
    expect(series[0].data).toEqual([
      [1, 9],
      [2, 4],
      [3, 1],
    ]);
  });

  it('handles an empty table', () => {
    const svg = renderSvg(rankFrequencyOptions([], 3));
    expect(svg.startsWith('<svg')).toBe(true);
  });
});
