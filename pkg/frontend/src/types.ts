// Shapes returned by the analysis service. All numbers are displayed
// verbatim; the dashboard never recomputes scores.

export interface SkillRow {
  skill_id: string;
  label: string;
  frequency: number;
  max_score: number;
  mean_score: number;
}

export interface OccupationRow {
  occupation_id: string;
  title: string;
  overlap_ratio: number;
  text_similarity: number;
  combined: number;
}

export interface CourseRow {
  course_id: string;
  title: string;
  score: number;
  matched_skill_ids: string[];
}

export interface SdgRow {
  sdg_id: number;
  name: string;
  relevance: number;
}

export interface AnalysisResult {
  document_name: string;
  chunk_count: number;
  skills: SkillRow[];
  occupations: OccupationRow[];
  courses: CourseRow[];
  sdgs: SdgRow[];
  timings?: Record<string, number>;
}

export interface SdgDetail {
  id: number;
  name: string;
  description: string;
}

export interface ApiError {
  code: string;
  message: string;
}

export type TabName = 'skills' | 'occupations' | 'courses' | 'sdg';
export type UploadStatus = 'idle' | 'uploading' | 'error';

export interface ViewState {
  currentTab: TabName;
  lastResult: AnalysisResult | null;
  uploadStatus: UploadStatus;
  errorMessage: string | null;
  openSdgModal: number | null;
}
