// Keyboard-only operability: everything reachable and actionable without a
// pointer, shortcut parity with the buttons, and focus order equal to
// document order for enriched elements.

import { describe, expect, it } from 'vitest'

import { mountWithSample, planSvg } from './helpers'

function accessibleName(node: HTMLElement): string {
  const aria = node.getAttribute('aria-label')
  if (aria) return aria
  const id = node.getAttribute('id')
  if (id) {
    const label = node.ownerDocument.querySelector(`label[for="${id}"]`)
    if (label?.textContent) return label.textContent.trim()
  }
  return node.textContent?.trim() ?? ''
}

function pressKey(key: string): void {
  document.dispatchEvent(new KeyboardEvent('keydown', { key, bubbles: true, cancelable: true }))
}

describe('keyboard-only operability', () => {
  it('every control is tabbable and has an accessible name', () => {
    const { root } = mountWithSample()
    const controls = Array.from(
      root.querySelectorAll<HTMLElement>('button, input, select, [tabindex]'),
    )
    expect(controls.length).toBeGreaterThan(10)
    for (const control of controls) {
      expect(control.getAttribute('tabindex'), control.outerHTML.slice(0, 60)).not.toBe('-1')
      expect(accessibleName(control), control.outerHTML.slice(0, 60)).not.toBe('')
    }
  })

  it('enriched plan elements are focusable in document order', () => {
    const { root } = mountWithSample()
    const svg = planSvg(root)
    const focusable = Array.from(svg.querySelectorAll<SVGElement>('[tabindex="0"]'))
    const enriched = Array.from(svg.querySelectorAll<SVGElement>('[data-layer-bit-field]'))
    expect(focusable).toEqual(enriched)
    const ids = enriched.map((n) => n.getAttribute('id'))
    const documentOrder = Array.from(svg.querySelectorAll<SVGElement>('*'))
      .filter((n) => n.hasAttribute('data-layer-bit-field'))
      .map((n) => n.getAttribute('id'))
    expect(ids).toEqual(documentOrder)
  })

  it('focusing an element populates the information panel', () => {
    const { viewer, root } = mountWithSample()
    const lift = planSvg(root).querySelector<SVGElement>('[id="G120"]')!
    lift.dispatchEvent(new FocusEvent('focus'))
    expect(viewer.state.selection).toBe('G120')
    expect(root.querySelector('#info-title')!.textContent).toBe('Lift A')
  })

  it('enter and space select the focused element', () => {
    const { viewer, root } = mountWithSample()
    const stairs = planSvg(root).querySelector<SVGElement>('[id="G130"]')!
    stairs.dispatchEvent(new KeyboardEvent('keydown', { key: 'Enter', bubbles: true, cancelable: true }))
    expect(viewer.state.selection).toBe('G130')
  })

  it('keyboard shortcuts mirror the control buttons exactly', () => {
    const first = mountWithSample()
    const byKeys = (() => {
      pressKey('+')
      pressKey('+')
      pressKey('ArrowRight')
      pressKey('ArrowDown')
      return planSvg(first.root).getAttribute('viewBox')
    })()

    const second = mountWithSample()
    second.root.querySelector<HTMLElement>('#zoom-in')!.click()
    second.root.querySelector<HTMLElement>('#zoom-in')!.click()
    second.root.querySelector<HTMLElement>('#pan-right')!.click()
    second.root.querySelector<HTMLElement>('#pan-down')!.click()
    const byButtons = planSvg(second.root).getAttribute('viewBox')

    expect(byKeys).toBe(byButtons)
  })

  it('zoom out undoes zoom in and reset restores the initial viewport', () => {
    const { viewer, root } = mountWithSample()
    const initial = planSvg(root).getAttribute('viewBox')
    viewer.zoomIn()
    viewer.zoomIn()
    viewer.zoomOut()
    viewer.zoomOut()
    expect(planSvg(root).getAttribute('viewBox')).toBe(initial)

    viewer.zoomIn()
    viewer.panBy(1, 1)
    viewer.resetView()
    expect(planSvg(root).getAttribute('viewBox')).toBe(initial)
    expect(viewer.state.viewport.zoom).toBe(1)
  })

  it('zoom stays within its configured bounds', () => {
    const { viewer } = mountWithSample()
    for (let i = 0; i < 40; i++) viewer.zoomIn()
    expect(viewer.state.viewport.zoom).toBeLessThanOrEqual(8)
    for (let i = 0; i < 80; i++) viewer.zoomOut()
    expect(viewer.state.viewport.zoom).toBeGreaterThanOrEqual(0.25)
  })

  it('number keys switch pages and shortcuts are listed on page 3', () => {
    const { viewer, root } = mountWithSample()
    pressKey('2')
    expect(viewer.state.page).toBe('user_profile')
    pressKey('3')
    expect(viewer.state.page).toBe('keyboard_shortcuts')
    const table = root.querySelector('#page-shortcuts table')!
    expect(table.textContent).toContain('Zoom in')
    pressKey('1')
    expect(viewer.state.page).toBe('main')
  })

  it('icon buttons expose hover text', () => {
    const { root } = mountWithSample()
    for (const id of ['#zoom-in', '#zoom-out', '#reset-view', '#pan-left']) {
      expect(root.querySelector<HTMLElement>(id)!.getAttribute('title')).toBeTruthy()
    }
  })

  it('control panels and the map canvas are disjoint regions', () => {
    const { root } = mountWithSample()
    const map = root.querySelector('#panel-svg')!
    for (const id of ['#panel-controls', '#panel-legend', '#panel-options', '#panel-info', '#panel-menu']) {
      const panel = root.querySelector(id)!
      expect(panel.contains(map)).toBe(false)
      expect(map.contains(panel)).toBe(false)
    }
  })
})
