import type { AnalysisResult, SdgDetail } from './types.js';
import { describeHttpError } from './state.js';

export class ApiClient {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/+$/, '') + path;
  }

  async analyzeFile(file: File): Promise<AnalysisResult> {
    const form = new FormData();
    form.append('file', file, file.name);
    const resp = await fetch(this.url('/api/analyze'), { method: 'POST', body: form });
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({}));
      throw new Error(describeHttpError(resp.status, body));
    }
    return (await resp.json()) as AnalysisResult;
  }

  async sdgDetail(sdgId: number): Promise<SdgDetail> {
    const resp = await fetch(this.url(`/api/sdg/${sdgId}`));
    if (!resp.ok) {
      throw new Error(`could not load SDG ${sdgId} (${resp.status})`);
    }
    return (await resp.json()) as SdgDetail;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(this.url('/api/health'));
      return resp.ok;
    } catch {
      return false;
    }
  }
}
