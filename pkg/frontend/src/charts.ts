/**
 * Chart construction and headless SVG rendering.
 *
 * Series data always equals the CSV rows it came from; the only derived
 * series is the powers-of-two degree binning, which is overlaid on (never
 * a replacement for) the raw scatter.
 */

import * as echarts from 'echarts';
import type { EChartsOption } from 'echarts';

import { DegreeHistRow, NgramRow } from './schema';

export interface DegreeBin {
  /** Inclusive lower edge, 2^i. */
  lo: number;
  /** Exclusive upper edge, 2^(i+1). */
  hi: number;
  vertices: number;
}

/** Group a degree histogram into powers-of-two bins (degree-0 kept apart). */
export function binPowersOfTwo(rows: DegreeHistRow[]): DegreeBin[] {
  const bins = new Map<number, DegreeBin>();
  for (const row of rows) {
    if (row.degree < 1) {
      continue;
    }
    const exponent = Math.floor(Math.log2(row.degree));
    const lo = 2 ** exponent;
    const bin = bins.get(lo) ?? { lo, hi: lo * 2, vertices: 0 };
    bin.vertices += row.count;
    bins.set(lo, bin);
  }
  return [...bins.values()].sort((a, b) => a.lo - b.lo);
}

/** True when bin totals never rise again after their peak (heavy tail shape). */
export function hasMonotoneTail(bins: DegreeBin[]): boolean {
  const totals = bins.map((bin) => bin.vertices);
  const peak = totals.indexOf(Math.max(...totals));
  for (let i = peak; i + 1 < totals.length; i++) {
    if (totals[i + 1] > totals[i]) {
      return false;
    }
  }
  return true;
}

export function degreeChartOptions(rows: DegreeHistRow[], loglog: boolean): EChartsOption {
  // A log axis cannot show degree 0; the raw series drops those points in
  // log-log mode and keeps everything in linear mode.
  const raw = rows
    .filter((row) => !loglog || row.degree > 0)
    .map((row) => [row.degree, row.count]);
  const bins = binPowersOfTwo(rows).map((bin) => [bin.lo, bin.vertices]);
  const axis = loglog ? 'log' : 'value';
  return {
    animation: false,
    title: { text: 'Degree distribution' },
    xAxis: { type: axis, name: 'degree' },
    yAxis: { type: axis, name: 'vertices' },
    series: [
      { name: 'vertices per degree', type: 'scatter', data: raw },
      { name: 'power-of-2 bins', type: 'line', data: bins },
    ],
  };
}

export function rankFrequencyOptions(rows: NgramRow[], n: number): EChartsOption {
  // Rows arrive count-descending from the report; rank is 1-based position.
  const data = rows.map((row, i) => [i + 1, row.count]);
  const loggable = data.length > 0;
  const axis = loggable ? 'log' : 'value';
  return {
    animation: false,
    title: { text: `${n}-vertex segment frequency by rank` },
    xAxis: { type: axis, name: 'rank' },
    yAxis: { type: axis, name: 'occurrences' },
    series: [{ name: `${n}-grams`, type: 'scatter', data }],
  };
}

export function renderSvg(options: EChartsOption, width = 800, height = 600): string {
  const chart = echarts.init(null, null, { renderer: 'svg', ssr: true, width, height });
  chart.setOption(options);
  const svg = chart.renderToSVGString();
  chart.dispose();
  return svg;
}
