// Legend panel: one row per coloured category present in the plan. Rebuilt on
// every style change so it always matches the map.

import { iconFor, humanize } from './icons'
import {
  CATEGORY_ORDER,
  PATTERN_NAMES,
  SVG_NS,
  buildHalfFillDef,
  buildPatternDef,
  type ResolvedFills,
} from './palette'

function swatch(doc: Document, fill: string, patternIndex: number | undefined): SVGSVGElement {
  const svg = doc.createElementNS(SVG_NS, 'svg') as SVGSVGElement
  svg.setAttribute('viewBox', '0 0 24 16')
  svg.setAttribute('width', '24')
  svg.setAttribute('height', '16')
  svg.setAttribute('aria-hidden', 'true')
  svg.classList.add('legend-swatch')

  let localFill = fill
  const match = fill.match(/^url\(#(.+)\)$/)
  if (match) {
    // Re-create the referenced paint locally so the swatch is self-contained.
    const defs = doc.createElementNS(SVG_NS, 'defs')
    const id = match[1]
    let def: SVGElement | null = null
    if (id.startsWith('af-halffill-')) def = buildHalfFillDef(doc, `#${id.slice('af-halffill-'.length)}`)
    else if (patternIndex !== undefined) def = buildPatternDef(doc, patternIndex)
    if (def) {
      const localId = `legend-${id}`
      def.setAttribute('id', localId)
      defs.appendChild(def)
      svg.appendChild(defs)
      localFill = `url(#${localId})`
    }
  }
  const rect = doc.createElementNS(SVG_NS, 'rect')
  rect.setAttribute('x', '0.5')
  rect.setAttribute('y', '0.5')
  rect.setAttribute('width', '23')
  rect.setAttribute('height', '15')
  rect.setAttribute('fill', localFill)
  rect.setAttribute('stroke', '#444444')
  svg.appendChild(rect)
  return svg
}

export function renderLegend(
  list: HTMLElement,
  resolved: ResolvedFills,
): void {
  const doc = list.ownerDocument
  list.textContent = ''
  const ordered = CATEGORY_ORDER.filter((c) => resolved.fills.has(c))
  for (const category of ordered) {
    const fill = resolved.fills.get(category)!
    const item = doc.createElement('li')
    item.dataset.category = category
    item.tabIndex = 0
    const patternIndex = resolved.patternIndex.get(category)
    const half = fill.match(/^url\(#af-halffill-([0-9a-f]{6})\)$/)
    let paintName = fill
    if (patternIndex !== undefined) paintName = `${PATTERN_NAMES[patternIndex]} pattern`
    else if (half) paintName = `half-filled #${half[1].toUpperCase()}`
    item.setAttribute('aria-label', `${humanize(category)}: ${paintName}`)
    item.insertAdjacentHTML('beforeend', iconFor(category))
    item.appendChild(swatch(doc, fill, patternIndex))
    const label = doc.createElement('span')
    label.textContent = humanize(category)
    item.appendChild(label)
    list.appendChild(item)
  }
}
