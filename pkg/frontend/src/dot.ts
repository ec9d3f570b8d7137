/**
 * DOT rendering through the WASM graphviz build.
 *
 * Rendering a graph image is best-effort: when the renderer cannot be
 * loaded (or rejects the input) the caller gets null plus a notice string
 * instead of a failure, so chart emission never depends on graphviz.
 */

export interface DotResult {
  svg: string | null;
  notice: string | null;
}

export async function renderDot(dotText: string): Promise<DotResult> {
  let instance: () => Promise<{ renderString(src: string, opts: { format: string }): string }>;
  try {
    ({ instance } = await import('@viz-js/viz'));
  } catch (error) {
    return { svg: null, notice: `DOT renderer unavailable (${(error as Error).message}); skipping graph image` };
  }
  try {
    const viz = await instance();
    return { svg: viz.renderString(dotText, { format: 'svg' }), notice: null };
  } catch (error) {
    return { svg: null, notice: `DOT rendering failed (${(error as Error).message}); skipping graph image` };
  }
}
