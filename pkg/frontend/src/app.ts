// App shell: owns the single ViewState, delegates all markup to render.ts
// and all HTTP to api.ts. One in-flight analysis at a time; a newer upload
// wins over a stale response.

import { ApiClient } from './api.js';
import { renderApp, renderSdgModal } from './render.js';
import {
  closeModal,
  initialState,
  openModal,
  selectTab,
  startUpload,
  uploadFailed,
  uploadSucceeded,
} from './state.js';
import type { TabName, ViewState } from './types.js';

let state: ViewState = initialState();
let uploadGeneration = 0;
let lastFile: File | null = null;

const root = document.getElementById('app') as HTMLElement;
const modalHost = document.getElementById('modal-host') as HTMLElement;
const dropzone = document.getElementById('dropzone') as HTMLElement;
const fileInput = document.getElementById('file-input') as HTMLInputElement;
const apiBaseInput = document.getElementById('api-base') as HTMLInputElement;

function client(): ApiClient {
  return new ApiClient(apiBaseInput.value || window.location.origin);
}

function update(next: ViewState): void {
  state = next;
  root.innerHTML = renderApp(state);
}

async function analyze(file: File): Promise<void> {
  lastFile = file;
  const generation = ++uploadGeneration;
  update(startUpload(state));
  try {
    const result = await client().analyzeFile(file);
    if (generation !== uploadGeneration) return; // a newer upload superseded this one
    update(uploadSucceeded(state, result));
  } catch (err) {
    if (generation !== uploadGeneration) return;
    update(uploadFailed(state, err instanceof Error ? err.message : String(err)));
  }
}

async function showSdgModal(sdgId: number): Promise<void> {
  update(openModal(state, sdgId));
  if (state.openSdgModal !== sdgId) return;
  try {
    const detail = await client().sdgDetail(sdgId);
    if (state.openSdgModal !== sdgId) return;
    modalHost.innerHTML = renderSdgModal(detail);
  } catch (err) {
    modalHost.innerHTML = renderSdgModal({
      id: sdgId,
      name: 'unavailable',
      description: err instanceof Error ? err.message : String(err),
    });
  }
}

function hideModal(): void {
  update(closeModal(state));
  modalHost.innerHTML = '';
}

root.addEventListener('click', (event) => {
  const target = event.target as HTMLElement;
  const tab = target.closest<HTMLElement>('[data-tab]');
  if (tab && !(tab as HTMLButtonElement).disabled) {
    update(selectTab(state, tab.dataset.tab as TabName));
    return;
  }
  const bar = target.closest<HTMLElement>('[data-sdg-id]');
  if (bar) {
    void showSdgModal(Number(bar.dataset.sdgId));
    return;
  }
  if (target.closest('[data-retry]') && lastFile) {
    void analyze(lastFile);
  }
});

modalHost.addEventListener('click', (event) => {
  if ((event.target as HTMLElement).dataset.close) hideModal();
});

document.addEventListener('keydown', (event) => {
  if (event.key === 'Escape') hideModal();
});

dropzone.addEventListener('dragover', (event) => {
  event.preventDefault();
  dropzone.classList.add('dragging');
});
dropzone.addEventListener('dragleave', () => dropzone.classList.remove('dragging'));
dropzone.addEventListener('drop', (event) => {
  event.preventDefault();
  dropzone.classList.remove('dragging');
  const file = event.dataTransfer?.files?.[0];
  if (file) void analyze(file);
});
dropzone.addEventListener('click', () => fileInput.click());
fileInput.addEventListener('change', () => {
  const file = fileInput.files?.[0];
  if (file) void analyze(file);
  fileInput.value = '';
});

update(state);
