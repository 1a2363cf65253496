import { Viewer } from './viewer'

export function bootstrap(root: HTMLElement): Viewer {
  return new Viewer(root)
}

// In the browser, start with the bundled sample plan or an explicit ?svg= URL.
if (typeof window !== 'undefined' && import.meta.env.MODE !== 'test') {
  const root = document.getElementById('app')
  if (root) {
    const viewer = bootstrap(root)
    const params = new URLSearchParams(window.location.search)
    const source = params.get('svg') ?? './sample-plan.svg'
    void viewer.loadUrl(source)
  }
}
