// Viewport math over the SVG viewBox: pure vector scaling, no rasterisation,
// so zooming never distorts the plan.

export interface Viewport {
  x: number
  y: number
  zoom: number
}

export const ZOOM_MIN = 0.25
export const ZOOM_MAX = 8
export const ZOOM_STEP = 1.25
const PAN_FRACTION = 0.1

export interface BaseBox {
  x: number
  y: number
  width: number
  height: number
}

export function initialViewport(): Viewport {
  return { x: 0, y: 0, zoom: 1 }
}

export function zoomIn(v: Viewport): Viewport {
  return { ...v, zoom: Math.min(ZOOM_MAX, v.zoom * ZOOM_STEP) }
}

export function zoomOut(v: Viewport): Viewport {
  return { ...v, zoom: Math.max(ZOOM_MIN, v.zoom / ZOOM_STEP) }
}

export function pan(v: Viewport, dx: number, dy: number, base: BaseBox): Viewport {
  return {
    ...v,
    x: v.x + (dx * base.width * PAN_FRACTION) / v.zoom,
    y: v.y + (dy * base.height * PAN_FRACTION) / v.zoom,
  }
}

export function viewBoxFor(v: Viewport, base: BaseBox): string {
  const width = base.width / v.zoom
  const height = base.height / v.zoom
  const cx = base.x + base.width / 2 + v.x
  const cy = base.y + base.height / 2 + v.y
  return `${cx - width / 2} ${cy - height / 2} ${width} ${height}`
}

export function parseBaseBox(svg: SVGSVGElement): BaseBox {
  const raw = svg.getAttribute('viewBox')
  if (raw) {
    const [x, y, width, height] = raw.split(/[\s,]+/).map(Number)
    if ([x, y, width, height].every(Number.isFinite) && width > 0 && height > 0) {
      return { x, y, width, height }
    }
  }
  const width = parseFloat(svg.getAttribute('width') ?? '800') || 800
  const height = parseFloat(svg.getAttribute('height') ?? '600') || 600
  return { x: 0, y: 0, width, height }
}
