// Bit-field layer logic. This mirrors the generator's engine exactly and is
// checked against its golden element states in tests/golden/.

export type Disability =
  | 'low_vision'
  | 'colour_impairment'
  | 'dyslexia'
  | 'mobility_impairment'

export type Action = 'highlight' | 'hide' | 'annotate'

export interface LayerRule {
  category: string
  disability: Disability
  action: Action
}

export interface LayerRules {
  bits: Record<Disability, number>
  rules: LayerRule[]
  precedence: Action[]
}

export interface DisabilityProfile {
  low_vision: boolean
  colour_impairment: boolean
  dyslexia: boolean
  mobility_impairment: boolean
}

export interface ElementState {
  active: boolean
  visible: boolean
  highlighted: boolean
  annotations: string[]
}

export const EMPTY_PROFILE: DisabilityProfile = {
  low_vision: false,
  colour_impairment: false,
  dyslexia: false,
  mobility_impairment: false,
}

// Shipped default: mobility and low-vision category rules; colour and
// dyslexia adaptations are style-level (palette, patterns, font).
export const DEFAULT_RULES: LayerRules = {
  bits: { low_vision: 0, colour_impairment: 1, dyslexia: 2, mobility_impairment: 3 },
  rules: [
    { category: 'elevator', disability: 'mobility_impairment', action: 'highlight' },
    { category: 'ramp', disability: 'mobility_impairment', action: 'highlight' },
    { category: 'accessible_toilet', disability: 'mobility_impairment', action: 'highlight' },
    { category: 'accessible_entrance', disability: 'mobility_impairment', action: 'highlight' },
    { category: 'stairs', disability: 'mobility_impairment', action: 'hide' },
    { category: 'stairs', disability: 'low_vision', action: 'highlight' },
    { category: 'entrance', disability: 'low_vision', action: 'highlight' },
    { category: 'exit', disability: 'low_vision', action: 'highlight' },
    { category: 'information_desk', disability: 'low_vision', action: 'highlight' },
  ],
  precedence: ['highlight', 'hide', 'annotate'],
}

export function profileMask(profile: DisabilityProfile, rules: LayerRules): number {
  let mask = 0
  for (const disability of Object.keys(rules.bits) as Disability[]) {
    if (profile[disability]) mask |= 1 << rules.bits[disability]
  }
  return mask
}

export function elementState(
  membership: number,
  category: string,
  pMask: number,
  rules: LayerRules,
): ElementState {
  const state: ElementState = {
    active: (membership & pMask) !== 0,
    visible: true,
    highlighted: false,
    annotations: [],
  }
  if (!state.active) return state

  const actions = new Set<Action>()
  for (const rule of rules.rules) {
    if (rule.category !== category) continue
    const bit = 1 << rules.bits[rule.disability]
    if ((membership & bit) !== 0 && (pMask & bit) !== 0) {
      actions.add(rule.action)
      if (rule.action === 'annotate') state.annotations.push(rule.disability)
    }
  }
  state.annotations.sort()

  for (const action of rules.precedence) {
    if (!actions.has(action)) continue
    if (action === 'highlight') state.highlighted = true
    else if (action === 'hide') state.visible = false
    break
  }
  return state
}
