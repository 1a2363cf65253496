// Small inline icon per category for the information panel and legend.

const ICON_PATHS: Record<string, string> = {
  retail: 'M3 6 L5 2 H11 L13 6 V14 H3 Z M6 8 H10',
  toilet: 'M8 2 A3 3 0 1 1 7.9 2 Z M5 9 H11 V14 H5 Z',
  accessible_toilet: 'M8 2 A2 2 0 1 1 7.9 2 Z M4 8 A4 4 0 1 0 12 10 M6 6 H11 L12 9',
  elevator: 'M3 2 H13 V14 H3 Z M6 5 L8 3 L10 5 M6 11 L8 13 L10 11',
  stairs: 'M2 14 H6 V11 H9 V8 H12 V5 H14 V2',
  ramp: 'M2 13 L14 5 V13 Z',
  entrance: 'M3 2 H10 V14 H3 Z M10 8 H15 M13 6 L15 8 L13 10',
  accessible_entrance: 'M3 2 H9 V14 H3 Z M9 8 H15 M12 6 L14 8 L12 10 M5 5 A1 1 0 1 1 4.9 5',
  exit: 'M6 2 H13 V14 H6 Z M6 8 H1 M3 6 L1 8 L3 10',
  information_desk: 'M8 2 A6 6 0 1 1 7.9 2 Z M8 6 V7 M8 9 V12',
  corridor: 'M2 5 H14 M2 11 H14',
  parking: 'M4 2 H10 A4 4 0 0 1 10 10 H6 V14 H4 Z',
  other: 'M3 3 H13 V13 H3 Z',
}

export function iconFor(category: string): string {
  const d = ICON_PATHS[category] ?? ICON_PATHS.other
  return (
    `<svg viewBox="0 0 16 16" width="24" height="24" role="img" aria-hidden="true">` +
    `<path d="${d}" fill="none" stroke="currentColor" stroke-width="1.5" stroke-linejoin="round"/></svg>`
  )
}

export function humanize(category: string): string {
  return category.replace(/_/g, ' ')
}
