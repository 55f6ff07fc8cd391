import type { AnalysisResult, TabName, ViewState } from './types.js';

export function initialState(): ViewState {
  return {
    currentTab: 'skills',
    lastResult: null,
    uploadStatus: 'idle',
    errorMessage: null,
    openSdgModal: null,
  };
}

export function startUpload(state: ViewState): ViewState {
  // last-write-wins: a new upload discards any stale error or modal
  return { ...state, uploadStatus: 'uploading', errorMessage: null, openSdgModal: null };
}

export function uploadSucceeded(state: ViewState, result: AnalysisResult): ViewState {
  return { ...state, uploadStatus: 'idle', lastResult: result, errorMessage: null };
}

export function uploadFailed(state: ViewState, message: string): ViewState {
  // keep the previous result so tabs stay usable after a failed retry
  return { ...state, uploadStatus: 'error', errorMessage: message };
}

export function selectTab(state: ViewState, tab: TabName): ViewState {
  return { ...state, currentTab: tab };
}

export function openModal(state: ViewState, sdgId: number): ViewState {
  if (sdgId < 1 || sdgId > 17) return state;
  return { ...state, openSdgModal: sdgId };
}

export function closeModal(state: ViewState): ViewState {
  return { ...state, openSdgModal: null };
}

export function describeHttpError(status: number, body: Partial<{ message: string }>): string {
  const detail = body.message ? `: ${body.message}` : '';
  switch (status) {
    case 413: return `document too large${detail}`;
    case 422: return `document is empty${detail}`;
    case 400: return `document could not be read${detail}`;
    case 500: return `analysis failed on the server${detail}`;
    case 503: return 'service is still loading, try again shortly';
    default: return `unexpected response (${status})${detail}`;
  }
}
