/**
 * Render a whole report directory: four charts plus the optional graph image.
 *
 * Reads only the published CSV schemas and the DOT export; never writes into
 * the input directory.
 */

import * as fs from 'node:fs';
import * as path from 'node:path';

import { degreeChartOptions, rankFrequencyOptions, renderSvg } from './charts';
import { renderDot } from './dot';
import { loadReportDir } from './schema';

export type ImageFormat = 'svg' | 'png';

export interface PlotSpec {
  inputDir: string;
  outputDir: string;
  format: ImageFormat;
  /** Log-log axes for the degree chart (raster/vector charts alike). */
  loglog: boolean;
}

async function writeImage(
  outputDir: string,
  stem: string,
  svg: string,
  format: ImageFormat,
  notices: string[],
): Promise<string> {
  if (format === 'png') {
    try {
      const sharp = (await import('sharp')).default;
      const file = path.join(outputDir, `${stem}.png`);
      fs.writeFileSync(file, await sharp(Buffer.from(svg)).png().toBuffer());
      return file;
    } catch (error) {
      notices.push(`rasterizer unavailable (${(error as Error).message}); writing ${stem}.svg instead`);
    }
  }
  const file = path.join(outputDir, `${stem}.svg`);
  fs.writeFileSync(file, svg);
  return file;
}

export interface RenderResult {
  charts: string[];
  graphImage: string | null;
  notices: string[];
}

export async function renderAll(spec: PlotSpec): Promise<RenderResult> {
  const inputs = loadReportDir(spec.inputDir);
  fs.mkdirSync(spec.outputDir, { recursive: true });
  const notices: string[] = [];
  const charts: string[] = [];

  charts.push(
    await writeImage(
      spec.outputDir,
      'degree_distribution',
      renderSvg(degreeChartOptions(inputs.degreeHist, spec.loglog)),
      spec.format,
      notices,
    ),
  );
  for (const [n, rows] of [...inputs.ngrams.entries()].sort((a, b) => a[0] - b[0])) {
    charts.push(
      await writeImage(
        spec.outputDir,
        `ngram_${n}_rank_frequency`,
        renderSvg(rankFrequencyOptions(rows, n)),
        spec.format,
        notices,
      ),
    );
  }

  let graphImage: string | null = null;
  if (inputs.dotText === null) {
    notices.push('traversal.dot not present in the report directory; skipping graph image');
  } else {
    const dot = await renderDot(inputs.dotText);
    if (dot.svg === null) {
      notices.push(dot.notice ?? 'DOT renderer unavailable');
    } else {
      graphImage = await writeImage(spec.outputDir, 'graph', dot.svg, spec.format, notices);
    }
  }
  return { charts, graphImage, notices };
}
