import { readFileSync } from 'node:fs'
import { dirname, join } from 'node:path'
import { fileURLToPath } from 'node:url'

import { expect } from 'vitest'

import { bootstrap } from '../src/main'
import type { Viewer } from '../src/viewer'

const here = dirname(fileURLToPath(import.meta.url))

export function readAsset(relative: string): string {
  return readFileSync(join(here, '..', relative), 'utf-8')
}

export const SAMPLE_PLAN = readAsset('public/sample-plan.svg')
export const PATTERN_DEMO = readAsset('public/pattern-demo.svg')

export function mountApp(): { viewer: Viewer; root: HTMLElement } {
  const html = readAsset('index.html')
  const body = html.slice(html.indexOf('<body>') + '<body>'.length, html.indexOf('</body>'))
  document.body.innerHTML = body
  const root = document.getElementById('app')!
  const viewer = bootstrap(root)
  return { viewer, root }
}

export function mountWithSample(): { viewer: Viewer; root: HTMLElement } {
  const mounted = mountApp()
  expect(mounted.viewer.loadSvgText(SAMPLE_PLAN, 'sample-plan.svg')).toBe(true)
  return mounted
}

export function planSvg(root: HTMLElement): SVGSVGElement {
  return root.querySelector<SVGSVGElement>('#svg-host svg')!
}

export function byCategory(root: HTMLElement, category: string): SVGElement[] {
  return Array.from(planSvg(root).querySelectorAll<SVGElement>(`[data-category="${category}"]`))
}
