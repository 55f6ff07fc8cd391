import type { AnalysisResult } from '../src/types.js';

// Captured from a real service response for the bundled sample document.
export const fixture: AnalysisResult = {
  "chunk_count": 3,
  "courses": [
    {
      "course_id": "C34",
      "matched_skill_ids": [
        "S101"
      ],
      "score": 0.402467,
      "title": "Certificate in tropical refinery manifests"
    },
    {
      "course_id": "C02",
      "matched_skill_ids": [
        "S005"
      ],
      "score": 0.39036,
      "title": "Certificate in rural observatory logistics"
    }
  ],
  "document_name": "sample_policy.txt",
  "occupations": [
    {
      "combined": 0.20136,
      "occupation_id": "O01",
      "overlap_ratio": 0.166667,
      "text_similarity": 0.236053,
      "title": "coastal fishery logistics programme lead"
    },
    {
      "combined": 0.176926,
      "occupation_id": "O06",
      "overlap_ratio": 0.166667,
      "text_similarity": 0.187185,
      "title": "island fishery forecasts programme lead"
    },
    {
      "combined": 0.169836,
      "occupation_id": "O13",
      "overlap_ratio": 0.166667,
      "text_similarity": 0.173006,
      "title": "wetland kiln manifests programme lead"
    },
    {
      "combined": 0.153764,
      "occupation_id": "O23",
      "overlap_ratio": 0.166667,
      "text_similarity": 0.140861,
      "title": "arctic kiln beacons programme lead"
    },
    {
      "combined": 0.096939,
      "occupation_id": "O15",
      "overlap_ratio": 0.0,
      "text_similarity": 0.193878,
      "title": "volcanic turbine quotas programme lead"
    }
  ],
  "sdgs": [
    {
      "name": "Clean Water and Sanitation",
      "relevance": 0.18446,
      "sdg_id": 6
    },
    {
      "name": "Partnerships for the Goals",
      "relevance": 0.133067,
      "sdg_id": 17
    },
    {
      "name": "Reduced Inequalities",
      "relevance": 0.106785,
      "sdg_id": 10
    },
    {
      "name": "Peace, Justice and Strong Institutions",
      "relevance": 0.094911,
      "sdg_id": 16
    },
    {
      "name": "Affordable and Clean Energy",
      "relevance": 0.089265,
      "sdg_id": 7
    },
    {
      "name": "No Poverty",
      "relevance": 0.069997,
      "sdg_id": 1
    },
    {
      "name": "Sustainable Cities and Communities",
      "relevance": 0.067838,
      "sdg_id": 11
    },
    {
      "name": "Responsible Consumption and Production",
      "relevance": 0.062268,
      "sdg_id": 12
    },
    {
      "name": "Industry, Innovation and Infrastructure",
      "relevance": 0.059653,
      "sdg_id": 9
    },
    {
      "name": "Zero Hunger",
      "relevance": 0.052623,
      "sdg_id": 2
    },
    {
      "name": "Decent Work and Economic Growth",
      "relevance": 0.048372,
      "sdg_id": 8
    },
    {
      "name": "Life Below Water",
      "relevance": 0.045218,
      "sdg_id": 14
    },
    {
      "name": "Climate Action",
      "relevance": 0.035621,
      "sdg_id": 13
    },
    {
      "name": "Quality Education",
      "relevance": 0.034748,
      "sdg_id": 4
    },
    {
      "name": "Life on Land",
      "relevance": 0.025756,
      "sdg_id": 15
    },
    {
      "name": "Good Health and Well-being",
      "relevance": 0.009556,
      "sdg_id": 3
    },
    {
      "name": "Gender Equality",
      "relevance": -0.045497,
      "sdg_id": 5
    }
  ],
  "skills": [
    {
      "frequency": 1,
      "label": "implement riverine brewery logistics",
      "max_score": 0.724144,
      "mean_score": 0.724144,
      "skill_id": "S005"
    },
    {
      "frequency": 1,
      "label": "implement highland fishery quotas",
      "max_score": 0.699439,
      "mean_score": 0.699439,
      "skill_id": "S101"
    },
    {
      "frequency": 1,
      "label": "implement island fishery forecasts",
      "max_score": 0.695586,
      "mean_score": 0.695586,
      "skill_id": "S041"
    },
    {
      "frequency": 1,
      "label": "manage alpine fishery gauges",
      "max_score": 0.375993,
      "mean_score": 0.375993,
      "skill_id": "S181"
    }
  ]
};
