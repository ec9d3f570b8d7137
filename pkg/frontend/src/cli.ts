#!/usr/bin/env node
/**
 * pathmine-plots --in <report dir> --out <image dir> [--format svg|png] [--linear]
 */

import { parseArgs } from 'node:util';

import { SchemaError } from './schema';
import { ImageFormat, renderAll } from './render';

async function main(): Promise<number> {
  let values;
  try {
    ({ values } = parseArgs({
      options: {
        in: { type: 'string' },
        out: { type: 'string' },
        format: { type: 'string', default: 'svg' },
        linear: { type: 'boolean', default: false },
      },
    }));
  } catch (error) {
    console.error((error as Error).message);
    return 1;
  }
  if (!values.in || !values.out) {
    console.error('usage: pathmine-plots --in <report dir> --out <image dir> [--format svg|png] [--linear]');
    return 1;
  }
  if (values.format !== 'svg' && values.format !== 'png') {
    console.error(`unknown format '${values.format}' (expected svg or png)`);
    return 1;
  }
  try {
    const result = await renderAll({
      inputDir: values.in,
      outputDir: values.out,
      format: values.format as ImageFormat,
      loglog: !values.linear,
    });
    for (const notice of result.notices) {
      console.error(`notice: ${notice}`);
    }
    for (const file of result.charts) {
      console.log(`written ${file}`);
    }
    if (result.graphImage !== null) {
      console.log(`written ${result.graphImage}`);
    }
    return 0;
  } catch (error) {
    if (error instanceof SchemaError) {
      console.error(`schema error: ${error.message}`);
      return 2;
    }
    console.error(`error: ${(error as Error).message}`);
    return 3;
  }
}

main().then((code) => {
  process.exitCode = code;
});
