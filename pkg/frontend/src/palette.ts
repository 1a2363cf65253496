// Paint catalogue mirroring the generator: IBM colorblind-safe base colours,
// af-halffill-<hex> gradients and the af-pattern-<n> monochrome patterns.

export const SVG_NS = 'http://www.w3.org/2000/svg'

export const BASE_COLOURS = ['#648FFF', '#785EF0', '#DC267F', '#FE6100', '#FFB000']

// Canonical vocabulary order; drives deterministic half-fill/pattern picks.
export const CATEGORY_ORDER = [
  'retail',
  'toilet',
  'accessible_toilet',
  'elevator',
  'stairs',
  'ramp',
  'entrance',
  'accessible_entrance',
  'exit',
  'information_desk',
  'corridor',
  'parking',
  'other',
]

export const DEFAULT_CATEGORY_COLOURS: Record<string, string> = {
  retail: '#FFB000',
  toilet: '#785EF0',
  accessible_toilet: '#785EF0',
  elevator: '#DC267F',
  stairs: '#FE6100',
  ramp: '#DC267F',
  entrance: '#FE6100',
  accessible_entrance: '#648FFF',
  exit: '#648FFF',
  information_desk: '#FFB000',
}

export type FillMode = 'full' | 'half' | 'pattern'

export const PATTERN_NAMES = [
  'diagonal stripes',
  'dots',
  'crosshatch',
  'horizontal lines',
  'vertical lines',
  'reverse diagonal stripes',
  'grid',
  'rings',
  'zigzag',
  'checkerboard',
]

export function halfFillId(colour: string): string {
  return `af-halffill-${colour.replace('#', '').toLowerCase()}`
}

function el(doc: Document, tag: string, attrs: Record<string, string>): SVGElement {
  const node = doc.createElementNS(SVG_NS, tag) as SVGElement
  for (const [name, value] of Object.entries(attrs)) node.setAttribute(name, value)
  return node
}

export function buildHalfFillDef(doc: Document, colour: string): SVGElement {
  const gradient = el(doc, 'linearGradient', {
    id: halfFillId(colour),
    x1: '0',
    y1: '0',
    x2: '1',
    y2: '0',
  })
  const stops: Array<[string, string]> = [
    ['0', colour],
    ['0.5', colour],
    ['0.5', '#FFFFFF'],
    ['1', '#FFFFFF'],
  ]
  for (const [offset, stopColour] of stops) {
    gradient.appendChild(el(doc, 'stop', { offset, 'stop-color': stopColour }))
  }
  return gradient
}

function strokePath(doc: Document, d: string, width = '1.5'): SVGElement {
  return el(doc, 'path', { d, stroke: '#000000', 'stroke-width': width, fill: 'none' })
}

export function buildPatternDef(doc: Document, index: number): SVGElement {
  const pattern = el(doc, 'pattern', {
    id: `af-pattern-${index}`,
    patternUnits: 'userSpaceOnUse',
    width: '8',
    height: '8',
  })
  pattern.appendChild(el(doc, 'rect', { x: '0', y: '0', width: '8', height: '8', fill: '#FFFFFF' }))
  const marks: Record<number, () => SVGElement[]> = {
    0: () => [strokePath(doc, 'M-2 2 L2 -2 M0 8 L8 0 M6 10 L10 6')],
    1: () => [el(doc, 'circle', { cx: '4', cy: '4', r: '1.5', fill: '#000000' })],
    2: () => [strokePath(doc, 'M0 0 L8 8 M8 0 L0 8', '1.2')],
    3: () => [strokePath(doc, 'M0 4 L8 4')],
    4: () => [strokePath(doc, 'M4 0 L4 8')],
    5: () => [strokePath(doc, 'M-2 6 L2 10 M0 0 L8 8 M6 -2 L10 2')],
    6: () => [strokePath(doc, 'M0 4 L8 4 M4 0 L4 8', '1.2')],
    7: () => [
      el(doc, 'circle', { cx: '4', cy: '4', r: '2.4', stroke: '#000000', 'stroke-width': '1.2', fill: 'none' }),
    ],
    8: () => [strokePath(doc, 'M0 6 L4 2 L8 6', '1.2')],
    9: () => [
      el(doc, 'rect', { x: '0', y: '0', width: '4', height: '4', fill: '#000000' }),
      el(doc, 'rect', { x: '4', y: '4', width: '4', height: '4', fill: '#000000' }),
    ],
  }
  for (const mark of (marks[index] ?? marks[0])()) pattern.appendChild(mark)
  return pattern
}

export interface ResolvedFills {
  fills: Map<string, string>
  defs: SVGElement[]
  patternIndex: Map<string, number>
}

// Identical strategy to the generator: half mode splits categories that share
// a base colour (first keeps the solid, later ones get the gradient); pattern
// mode hands out one pattern per coloured category in canonical order.
export function resolveFills(
  doc: Document,
  mode: FillMode,
  categoryColours: Record<string, string>,
  categoriesPresent: Set<string>,
): ResolvedFills {
  const ordered = CATEGORY_ORDER.filter(
    (c) => categoriesPresent.has(c) && c in categoryColours,
  )
  const fills = new Map<string, string>()
  const defs: SVGElement[] = []
  const patternIndex = new Map<string, number>()

  if (mode === 'pattern') {
    if (ordered.length > PATTERN_NAMES.length) {
      throw new Error(
        `pattern mode needs ${ordered.length} patterns but only ${PATTERN_NAMES.length} exist`,
      )
    }
    ordered.forEach((category, index) => {
      fills.set(category, `url(#af-pattern-${index})`)
      patternIndex.set(category, index)
      defs.push(buildPatternDef(doc, index))
    })
    return { fills, defs, patternIndex }
  }

  const seen = new Set<string>()
  for (const category of ordered) {
    const colour = categoryColours[category]
    if (mode === 'half' && seen.has(colour)) {
      fills.set(category, `url(#${halfFillId(colour)})`)
      if (!defs.some((d) => d.id === halfFillId(colour))) {
        defs.push(buildHalfFillDef(doc, colour))
      }
    } else {
      seen.add(colour)
      fills.set(category, colour)
    }
  }
  return { fills, defs, patternIndex }
}
