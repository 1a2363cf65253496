// Applies a profile + style options to the live SVG DOM. Re-runnable: every
// property the viewer owns is reset before being re-derived, so toggling
// layers back and forth always lands on the same rendering.

import type { DisabilityProfile, LayerRules } from './layers'
import { elementState, profileMask } from './layers'
import { SVG_NS, type FillMode, resolveFills } from './palette'

export interface StyleOptions {
  categoryColours: Record<string, string>
  fillMode: FillMode
  font: 'default' | 'large_print' | 'open_dyslexic'
  fontOverridden: boolean
  overridden: Set<string>
}

export const FONT_FAMILIES: Record<StyleOptions['font'], string> = {
  default: 'sans-serif',
  large_print: 'sans-serif',
  open_dyslexic: 'OpenDyslexic, sans-serif',
}

const LARGE_PRINT_SCALE = 1.5

export function enrichedElements(svg: SVGSVGElement): SVGElement[] {
  return Array.from(svg.querySelectorAll<SVGElement>('[data-layer-bit-field]'))
}

export function categoriesPresent(svg: SVGSVGElement): Set<string> {
  const present = new Set<string>()
  for (const node of enrichedElements(svg)) {
    const category = node.getAttribute('data-category')
    if (category) present.add(category)
  }
  return present
}

export function effectiveFont(style: StyleOptions, profile: DisabilityProfile): StyleOptions['font'] {
  if (profile.dyslexia && !style.fontOverridden && style.font === 'default') {
    return 'open_dyslexic'
  }
  return style.font
}

function ensureDefs(svg: SVGSVGElement, defs: SVGElement[]): void {
  let host = svg.querySelector(':scope > defs[data-af-defs]')
  if (!host) {
    host = svg.ownerDocument.createElementNS(SVG_NS, 'defs')
    host.setAttribute('data-af-defs', '')
    svg.insertBefore(host, svg.firstChild)
  }
  host.textContent = ''
  for (const def of defs) host.appendChild(def)
}

function rememberBaseline(node: SVGElement): void {
  if (node.dataset.afBaseFill === undefined) {
    node.dataset.afBaseFill = node.getAttribute('fill') ?? ''
  }
}

function rememberFontBaseline(text: SVGElement): void {
  if (text.dataset.afBaseSize === undefined) {
    text.dataset.afBaseSize = text.getAttribute('font-size') ?? ''
  }
}

export function applyView(
  svg: SVGSVGElement,
  profile: DisabilityProfile,
  style: StyleOptions,
  rules: LayerRules,
): void {
  const pMask = profileMask(profile, rules)
  const present = categoriesPresent(svg)
  const { fills, defs } = resolveFills(
    svg.ownerDocument,
    style.fillMode,
    style.categoryColours,
    present,
  )
  ensureDefs(svg, defs)

  for (const node of enrichedElements(svg)) {
    const category = node.getAttribute('data-category') ?? ''
    const membership = parseInt(node.getAttribute('data-layer-bit-field') ?? '0', 10) || 0
    const state = elementState(membership, category, pMask, rules)
    node.setAttribute('data-layer-state', state.active ? 'active' : 'inactive')

    rememberBaseline(node)
    const fill = fills.get(category)
    node.removeAttribute('fill-opacity')
    if (fill !== undefined) {
      node.setAttribute('fill', fill)
      // Outline plus fill emphasis: base fills muted, highlights saturated.
      node.setAttribute('fill-opacity', '0.85')
    } else if (node.dataset.afBaseFill) {
      node.setAttribute('fill', node.dataset.afBaseFill)
    }

    node.style.removeProperty('display')
    node.style.removeProperty('stroke')
    node.style.removeProperty('stroke-width')
    node.style.removeProperty('stroke-linejoin')
    if (!state.visible) {
      node.style.setProperty('display', 'none')
    } else if (state.highlighted) {
      node.style.setProperty('stroke', '#000000')
      node.style.setProperty('stroke-width', '3')
      node.style.setProperty('stroke-linejoin', 'round')
      node.setAttribute('fill-opacity', '1')
    }
  }

  const font = effectiveFont(style, profile)
  for (const text of Array.from(svg.querySelectorAll<SVGElement>('text'))) {
    text.setAttribute('font-family', FONT_FAMILIES[font])
    rememberFontBaseline(text)
    const base = text.dataset.afBaseSize ?? ''
    if (font === 'large_print') {
      const size = parseFloat(base || '16')
      text.setAttribute('font-size', Number.isFinite(size) ? `${size * LARGE_PRINT_SCALE}` : '1.5em')
    } else if (base) {
      text.setAttribute('font-size', base)
    } else {
      text.removeAttribute('font-size')
    }
    // Presentation attributes rather than CSSOM: paint-order is SVG-only and
    // absent from some CSS object models.
    text.removeAttribute('paint-order')
    text.removeAttribute('stroke')
    text.removeAttribute('stroke-width')
    if (style.fillMode === 'pattern') {
      text.setAttribute('paint-order', 'stroke')
      text.setAttribute('stroke', '#FFFFFF')
      text.setAttribute('stroke-width', '3')
    }
  }
}
