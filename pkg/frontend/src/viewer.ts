// The viewer: owns the state, the loaded plan and all panel wiring.
// Everything routes through small action methods so keyboard shortcuts and
// buttons share the same code paths.

import { iconFor, humanize } from './icons'
import {
  DEFAULT_RULES,
  EMPTY_PROFILE,
  type DisabilityProfile,
  type LayerRules,
} from './layers'
import { renderLegend } from './legend'
import { DEFAULT_CATEGORY_COLOURS, resolveFills } from './palette'
import {
  initialViewport,
  pan,
  parseBaseBox,
  viewBoxFor,
  zoomIn,
  zoomOut,
  type BaseBox,
  type Viewport,
} from './panzoom'
import {
  applyView,
  categoriesPresent,
  enrichedElements,
  type StyleOptions,
} from './view'

export type Page = 'main' | 'user_profile' | 'keyboard_shortcuts'

export interface ViewerState {
  profile: DisabilityProfile
  style: StyleOptions
  selection: string | null
  viewport: Viewport
  page: Page
}

export function defaultStyle(): StyleOptions {
  return {
    categoryColours: { ...DEFAULT_CATEGORY_COLOURS },
    fillMode: 'half',
    font: 'default',
    fontOverridden: false,
    overridden: new Set(),
  }
}

const PROFILE_QUESTIONS: Array<{ key: keyof DisabilityProfile; question: string }> = [
  { key: 'low_vision', question: 'Do you experience low vision?' },
  { key: 'colour_impairment', question: 'Do you experience a colour vision impairment?' },
  { key: 'dyslexia', question: 'Do you experience dyslexia?' },
  { key: 'mobility_impairment', question: 'Do you experience a mobility impairment?' },
]

export class Viewer {
  readonly state: ViewerState
  readonly rules: LayerRules
  private readonly root: HTMLElement
  private svg: SVGSVGElement | null = null
  private baseBox: BaseBox = { x: 0, y: 0, width: 800, height: 600 }

  constructor(root: HTMLElement, rules: LayerRules = DEFAULT_RULES) {
    this.root = root
    this.rules = rules
    this.state = {
      profile: { ...EMPTY_PROFILE },
      style: defaultStyle(),
      selection: null,
      viewport: initialViewport(),
      page: 'main',
    }
    this.buildProfileForm()
    this.wireControls()
  }

  private element<T extends HTMLElement>(selector: string): T {
    const node = this.root.querySelector<T>(selector)
    if (!node) throw new Error(`missing viewer element ${selector}`)
    return node
  }

  // ---- document loading ----------------------------------------------

  loadSvgText(text: string, sourceName = 'plan.svg'): boolean {
    const parsed = new DOMParser().parseFromString(text, 'image/svg+xml')
    const svg = parsed.documentElement
    if (!svg || svg.nodeName.toLowerCase() !== 'svg' || parsed.querySelector('parsererror')) {
      this.showError(`${sourceName} is not an SVG file; keeping the current plan`)
      return false
    }
    const host = this.element('#svg-host')
    host.textContent = ''
    const adopted = host.ownerDocument.importNode(svg, true) as unknown as SVGSVGElement
    host.appendChild(adopted)
    this.svg = adopted
    this.baseBox = parseBaseBox(adopted)
    this.state.viewport = initialViewport()
    this.state.selection = null
    this.showError('')
    this.wirePlanInteractions()
    this.refresh()
    return true
  }

  async loadUrl(url: string): Promise<boolean> {
    try {
      const response = await fetch(url)
      if (!response.ok) throw new Error(`HTTP ${response.status}`)
      return this.loadSvgText(await response.text(), url)
    } catch (error) {
      this.showError(`could not load ${url}: ${String(error)}`)
      return false
    }
  }

  private showError(message: string): void {
    const box = this.element('#load-error')
    box.textContent = message
    box.hidden = message === ''
  }

  // ---- state transitions ----------------------------------------------

  submitProfile(profile: DisabilityProfile): void {
    this.state.profile = { ...profile }
    this.refresh()
  }

  setCategoryColour(category: string, colour: string): void {
    this.state.style.categoryColours[category] = colour.toUpperCase()
    this.state.style.overridden.add(category)
    this.refresh()
  }

  setFont(font: StyleOptions['font']): void {
    this.state.style.font = font
    this.state.style.fontOverridden = true
    this.refresh()
  }

  setPatternMode(on: boolean): void {
    this.state.style.fillMode = on ? 'pattern' : 'half'
    this.refresh()
  }

  selectElement(id: string | null): void {
    this.state.selection = id
    this.renderInfo()
  }

  showPage(page: Page): void {
    this.state.page = page
    for (const section of Array.from(this.root.querySelectorAll<HTMLElement>('.page'))) {
      section.hidden = section.dataset.page !== page
    }
    if (page === 'user_profile') {
      this.element<HTMLInputElement>('#profile-form input').focus()
    }
  }

  zoomIn(): void {
    this.state.viewport = zoomIn(this.state.viewport)
    this.applyViewport()
  }

  zoomOut(): void {
    this.state.viewport = zoomOut(this.state.viewport)
    this.applyViewport()
  }

  panBy(dx: number, dy: number): void {
    this.state.viewport = pan(this.state.viewport, dx, dy, this.baseBox)
    this.applyViewport()
  }

  resetView(): void {
    this.state.viewport = initialViewport()
    this.applyViewport()
  }

  // ---- rendering --------------------------------------------------------

  refresh(): void {
    if (!this.svg) return
    applyView(this.svg, this.state.profile, this.state.style, this.rules)
    this.applyViewport()
    this.renderLegendPanel()
    this.renderColourOptions()
    this.renderInfo()
  }

  private applyViewport(): void {
    if (!this.svg) return
    this.svg.setAttribute('viewBox', viewBoxFor(this.state.viewport, this.baseBox))
  }

  private renderLegendPanel(): void {
    if (!this.svg) return
    const resolved = resolveFills(
      this.root.ownerDocument,
      this.state.style.fillMode,
      this.state.style.categoryColours,
      categoriesPresent(this.svg),
    )
    renderLegend(this.element('#legend-list'), resolved)
  }

  private renderColourOptions(): void {
    if (!this.svg) return
    const host = this.element('#colour-options')
    const doc = host.ownerDocument
    const present = categoriesPresent(this.svg)
    const wanted = Object.keys(this.state.style.categoryColours).filter((c) => present.has(c))
    const existing = new Set(
      Array.from(host.querySelectorAll<HTMLInputElement>('input')).map((i) => i.dataset.category),
    )
    if (existing.size === wanted.length && wanted.every((c) => existing.has(c))) {
      for (const input of Array.from(host.querySelectorAll<HTMLInputElement>('input'))) {
        input.value = this.state.style.categoryColours[input.dataset.category!]?.toLowerCase() ?? '#000000'
      }
      return
    }
    host.textContent = ''
    for (const category of wanted) {
      const row = doc.createElement('div')
      row.className = 'colour-row'
      const id = `colour-${category}`
      const label = doc.createElement('label')
      label.htmlFor = id
      label.textContent = humanize(category)
      const input = doc.createElement('input')
      input.type = 'color'
      input.id = id
      input.dataset.category = category
      input.value = this.state.style.categoryColours[category].toLowerCase()
      input.addEventListener('input', () => this.setCategoryColour(category, input.value))
      row.append(label, input)
      host.appendChild(row)
    }
  }

  private renderInfo(): void {
    const title = this.element('#info-title')
    const desc = this.element('#info-desc')
    const icon = this.element('#info-icon')
    const selected = this.state.selection && this.svg
      ? this.svg.querySelector<SVGElement>(`[id="${this.state.selection}"]`)
      : null
    for (const node of this.svg ? enrichedElements(this.svg) : []) {
      node.classList.toggle('af-selected', node === selected)
    }
    if (!selected) {
      title.textContent = ''
      desc.textContent = ''
      icon.innerHTML = ''
      return
    }
    const category = selected.getAttribute('data-category') ?? 'other'
    title.textContent = selected.querySelector(':scope > title')?.textContent ?? this.state.selection
    desc.textContent = selected.querySelector(':scope > desc')?.textContent ?? ''
    icon.innerHTML = iconFor(category)
    icon.setAttribute('aria-label', humanize(category))
  }

  // ---- wiring -----------------------------------------------------------

  private buildProfileForm(): void {
    const form = this.element<HTMLFormElement>('#profile-form')
    const doc = form.ownerDocument
    const fieldset = form.querySelector('fieldset')!
    for (const { key, question } of PROFILE_QUESTIONS) {
      const row = doc.createElement('div')
      const input = doc.createElement('input')
      input.type = 'checkbox'
      input.id = `q-${key}`
      input.name = key
      const label = doc.createElement('label')
      label.htmlFor = input.id
      label.textContent = question
      row.append(input, label)
      fieldset.appendChild(row)
    }
  }

  private wirePlanInteractions(): void {
    if (!this.svg) return
    for (const node of enrichedElements(this.svg)) {
      node.addEventListener('click', () => this.selectElement(node.getAttribute('id')))
      node.addEventListener('focus', () => this.selectElement(node.getAttribute('id')))
      node.addEventListener('keydown', (event) => {
        const key = (event as KeyboardEvent).key
        if (key === 'Enter' || key === ' ') {
          this.selectElement(node.getAttribute('id'))
            ; (event as KeyboardEvent).preventDefault()
        }
      })
    }
    this.svg.addEventListener('click', (event) => {
      if (event.target === this.svg) this.selectElement(null)
    })
  }

  private wireControls(): void {
    this.element('#zoom-in').addEventListener('click', () => this.zoomIn())
    this.element('#zoom-out').addEventListener('click', () => this.zoomOut())
    this.element('#pan-left').addEventListener('click', () => this.panBy(-1, 0))
    this.element('#pan-right').addEventListener('click', () => this.panBy(1, 0))
    this.element('#pan-up').addEventListener('click', () => this.panBy(0, -1))
    this.element('#pan-down').addEventListener('click', () => this.panBy(0, 1))
    this.element('#reset-view').addEventListener('click', () => this.resetView())

    this.element('#open-profile').addEventListener('click', () => this.showPage('user_profile'))
    this.element('#open-shortcuts').addEventListener('click', () => this.showPage('keyboard_shortcuts'))
    for (const button of Array.from(this.root.querySelectorAll<HTMLElement>('.back-to-main'))) {
      button.addEventListener('click', () => this.showPage('main'))
    }

    const form = this.element<HTMLFormElement>('#profile-form')
    form.addEventListener('submit', (event) => {
      event.preventDefault()
      const profile = { ...EMPTY_PROFILE }
      for (const { key } of PROFILE_QUESTIONS) {
        profile[key] = form.querySelector<HTMLInputElement>(`#q-${key}`)!.checked
      }
      this.submitProfile(profile)
      this.showPage('main')
    })

    const fontSelect = this.element<HTMLSelectElement>('#font-select')
    fontSelect.addEventListener('change', () => {
      this.setFont(fontSelect.value as StyleOptions['font'])
    })
    const patternToggle = this.element<HTMLInputElement>('#pattern-toggle')
    patternToggle.addEventListener('change', () => this.setPatternMode(patternToggle.checked))

    const fileInput = this.element<HTMLInputElement>('#file-input')
    fileInput.addEventListener('change', () => {
      const file = fileInput.files?.[0]
      if (!file) return
      file.text().then((text) => this.loadSvgText(text, file.name))
    })
    this.element('#load-url').addEventListener('click', () => {
      const url = this.element<HTMLInputElement>('#url-input').value.trim()
      if (url) void this.loadUrl(url)
    })

    this.root.ownerDocument.addEventListener('keydown', (event) => this.handleShortcut(event))
  }

  handleShortcut(event: KeyboardEvent): void {
    const target = event.target as HTMLElement | null
    if (target && ['INPUT', 'SELECT', 'TEXTAREA'].includes(target.tagName)) return
    switch (event.key) {
      case '+':
      case '=':
        this.zoomIn()
        break
      case '-':
        this.zoomOut()
        break
      case 'ArrowLeft':
        this.panBy(-1, 0)
        break
      case 'ArrowRight':
        this.panBy(1, 0)
        break
      case 'ArrowUp':
        this.panBy(0, -1)
        break
      case 'ArrowDown':
        this.panBy(0, 1)
        break
      case '0':
        this.resetView()
        break
      case '1':
        this.showPage('main')
        break
      case '2':
        this.showPage('user_profile')
        break
      case '3':
        this.showPage('keyboard_shortcuts')
        break
      default:
        return
    }
    event.preventDefault()
  }
}
