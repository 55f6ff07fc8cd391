// Pure HTML renderers: every function maps data to a markup string with no
// DOM access, so the same output can be snapshot-tested in Node and
// injected into the page by the app shell.

import type {
  CourseRow,
  OccupationRow,
  SdgDetail,
  SdgRow,
  SkillRow,
  TabName,
  ViewState,
} from './types.js';

const PALETTE = [
  '#4e79a7', '#f28e2b', '#e15759', '#76b7b2', '#59a14f',
  '#edc948', '#b07aa1', '#ff9da7', '#9c755f', '#bab0ac',
];

export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function emptyState(message: string): string {
  return `<p class="empty-state">${escapeHtml(message)}</p>`;
}

export interface DonutSegment {
  skillId: string;
  label: string;
  fraction: number;
  color: string;
}

export function donutSegments(skills: SkillRow[]): DonutSegment[] {
  const total = skills.reduce((sum, s) => sum + s.frequency, 0);
  if (total === 0) return [];
  return skills.map((s, i) => ({
    skillId: s.skill_id,
    label: s.label,
    fraction: s.frequency / total,
    color: PALETTE[i % PALETTE.length],
  }));
}

function renderDonut(segments: DonutSegment[]): string {
  const radius = 60;
  const circumference = 2 * Math.PI * radius;
  let offset = 0;
  const arcs = segments.map((seg) => {
    const length = seg.fraction * circumference;
    const arc =
      `<circle class="donut-segment" data-skill-id="${escapeHtml(seg.skillId)}" ` +
      `data-fraction="${seg.fraction}" cx="80" cy="80" r="${radius}" fill="none" ` +
      `stroke="${seg.color}" stroke-width="28" ` +
      `stroke-dasharray="${length} ${circumference - length}" ` +
      `stroke-dashoffset="${-offset}"><title>${escapeHtml(seg.label)}</title></circle>`;
    offset += length;
    return arc;
  });
  return (
    `<svg class="donut" viewBox="0 0 160 160" role="img" aria-label="skill frequency share">` +
    arcs.join('') +
    `</svg>`
  );
}

export function renderSkillsTab(skills: SkillRow[]): string {
  if (skills.length === 0) return emptyState('no skills above threshold');
  const segments = donutSegments(skills);
  const rows = skills
    .map((s, i) =>
      `<tr><td><span class="swatch" style="background:${segments[i].color}"></span>` +
      `${escapeHtml(s.skill_id)}</td><td>${escapeHtml(s.label)}</td>` +
      `<td class="num">${s.frequency}</td><td class="num">${s.max_score}</td></tr>`)
    .join('');
  return (
    `<div class="skills-panel">${renderDonut(segments)}` +
    `<table class="skills-table"><thead><tr><th>id</th><th>skill</th>` +
    `<th>frequency</th><th>max score</th></tr></thead>` +
    `<tbody>${rows}</tbody></table></div>`
  );
}

function renderBar(width: number, color: string): string {
  const clamped = Math.max(0, Math.min(100, width));
  return `<div class="bar-track"><div class="bar" style="width:${clamped}%;background:${color}"></div></div>`;
}

export function renderOccupationsTab(occupations: OccupationRow[]): string {
  if (occupations.length === 0) return emptyState('no matching occupations');
  const max = Math.max(...occupations.map((o) => o.combined), 1e-9);
  const rows = occupations
    .map((o) =>
      `<li class="bar-row" data-occupation-id="${escapeHtml(o.occupation_id)}">` +
      `<span class="bar-label">${escapeHtml(o.title)}</span>` +
      renderBar((o.combined / max) * 100, PALETTE[0]) +
      `<span class="bar-value" title="overlap ${o.overlap_ratio}, similarity ${o.text_similarity}">` +
      `${o.combined}</span></li>`)
    .join('');
  return `<ol class="bar-chart occupations">${rows}</ol>`;
}

export function renderCoursesTab(courses: CourseRow[]): string {
  if (courses.length === 0) return emptyState('no courses above threshold');
  const rows = courses
    .map((c) =>
      `<li class="course-row" data-course-id="${escapeHtml(c.course_id)}">` +
      `<span class="course-title">${escapeHtml(c.title)}</span>` +
      `<span class="course-score">${c.score}</span>` +
      `<span class="course-skills">via ${c.matched_skill_ids.map(escapeHtml).join(', ')}</span></li>`)
    .join('');
  return `<ol class="course-list">${rows}</ol>`;
}

export function renderSdgTab(sdgs: SdgRow[]): string {
  if (sdgs.length === 0) return emptyState('no SDG scores');
  const max = Math.max(...sdgs.map((s) => s.relevance), 1e-9);
  const rows = sdgs
    .map((s, i) =>
      `<li class="bar-row sdg-bar" data-sdg-id="${s.sdg_id}" tabindex="0">` +
      `<span class="bar-label">${s.sdg_id}. ${escapeHtml(s.name)}</span>` +
      renderBar((Math.max(0, s.relevance) / max) * 100, PALETTE[i % PALETTE.length]) +
      `<span class="bar-value">${s.relevance}</span></li>`)
    .join('');
  return `<ol class="bar-chart sdgs">${rows}</ol>`;
}

export function renderSdgModal(detail: SdgDetail): string {
  return (
    `<div class="modal-backdrop" data-close="1">` +
    `<div class="modal" role="dialog" aria-modal="true">` +
    `<header><h2>SDG ${detail.id}: ${escapeHtml(detail.name)}</h2>` +
    `<button class="modal-close" data-close="1" aria-label="close">&times;</button></header>` +
    `<p>${escapeHtml(detail.description)}</p></div></div>`
  );
}

export function renderTabs(current: TabName, enabled: boolean): string {
  const tabs: TabName[] = ['skills', 'occupations', 'courses', 'sdg'];
  const labels: Record<TabName, string> = {
    skills: 'Skills',
    occupations: 'Occupations',
    courses: 'Courses',
    sdg: 'SDG',
  };
  return tabs
    .map((tab) =>
      `<button class="tab${tab === current ? ' active' : ''}" data-tab="${tab}"` +
      `${enabled ? '' : ' disabled'}>${labels[tab]}</button>`)
    .join('');
}

export function renderActiveTab(state: ViewState): string {
  const result = state.lastResult;
  if (result === null) {
    return emptyState('drop a document above to analyze it');
  }
  switch (state.currentTab) {
    case 'skills': return renderSkillsTab(result.skills);
    case 'occupations': return renderOccupationsTab(result.occupations);
    case 'courses': return renderCoursesTab(result.courses);
    case 'sdg': return renderSdgTab(result.sdgs);
  }
}

export function renderStatus(state: ViewState): string {
  if (state.uploadStatus === 'uploading') {
    return `<span class="status uploading">analyzing...</span>`;
  }
  if (state.uploadStatus === 'error' && state.errorMessage) {
    return (
      `<span class="status error">${escapeHtml(state.errorMessage)}</span> ` +
      `<button class="retry" data-retry="1">retry</button>`
    );
  }
  const result = state.lastResult;
  if (result) {
    return (
      `<span class="status ok">${escapeHtml(result.document_name)}: ` +
      `${result.chunk_count} chunks, ${result.skills.length} skills</span>`
    );
  }
  return `<span class="status idle">no document analyzed yet</span>`;
}

export function renderApp(state: ViewState): string {
  return (
    `<nav class="tabs">${renderTabs(state.currentTab, state.lastResult !== null)}</nav>` +
    `<div class="status-line">${renderStatus(state)}</div>` +
    `<section class="tab-body">${renderActiveTab(state)}</section>`
  );
}
