// GENERATED by frontend/scripts/generate_fixtures.py — do not edit.
// Bodies are verbatim engine outputs for the bundled example case.

export const fig1Doc = {
  "schema": "tea-case/1",
  "title": "Fair CDSS",
  "revision": 0,
  "root": "C1",
  "claims": [
    {
      "id": "C1",
      "statement": "The AI-enabled CDSS is fair",
      "kind": "goal",
      "stage": null,
      "considers": [],
      "children": [
        "C2",
        "C3",
        "C4"
      ],
      "evidence": []
    },
    {
      "id": "C2",
      "statement": "The CDSS does not discriminate against patients",
      "kind": "intermediate",
      "stage": "data_analysis",
      "considers": [
        "FC-PD-04"
      ],
      "children": [
        "C5",
        "C6"
      ],
      "evidence": []
    },
    {
      "id": "C5",
      "statement": "Source data quality is sufficient for the patient population",
      "kind": "intermediate",
      "stage": "data_extraction_procurement",
      "considers": [
        "FC-PD-03"
      ],
      "children": [],
      "evidence": [
        "E1"
      ]
    },
    {
      "id": "C6",
      "statement": "Data cleaning and imputation choices are justified",
      "kind": "intermediate",
      "stage": "preprocessing_feature_engineering",
      "considers": [
        "FC-MD-05"
      ],
      "children": [],
      "evidence": [
        "E2"
      ]
    },
    {
      "id": "C3",
      "statement": "Chosen statistical fairness measures are satisfied",
      "kind": "intermediate",
      "stage": null,
      "considers": [],
      "children": [
        "C7"
      ],
      "evidence": []
    },
    {
      "id": "C7",
      "statement": "Selection rates are comparable across patient groups",
      "kind": "intermediate",
      "stage": "model_testing_validation",
      "considers": [
        "FC-MD-07"
      ],
      "children": [],
      "evidence": [
        "E3"
      ]
    },
    {
      "id": "C4",
      "statement": "Clinicians are trained and roles are clearly assigned",
      "kind": "intermediate",
      "stage": "user_training",
      "considers": [
        "FC-SD-10"
      ],
      "children": [],
      "evidence": [
        "E4"
      ]
    }
  ],
  "evidence": [
    {
      "id": "E1",
      "title": "Data quality audit",
      "kind": "document",
      "payload": {
        "uri": "reports/data-quality.md",
        "sha256": "2e5ea3596d9a507d5ebe073ac52feefb45f9d0d34011743baaa9167cc0022964",
        "description": ""
      }
    },
    {
      "id": "E2",
      "title": "Cleaning review minutes",
      "kind": "record",
      "payload": {
        "description": "Imputation choices walked through with clinical staff",
        "date": "2024-05-14",
        "participants": [
          "clinical lead",
          "data engineer",
          "patient representative"
        ]
      }
    },
    {
      "id": "E3",
      "title": "Selection-rate parity check",
      "kind": "metric",
      "payload": {
        "dataset": "outcomes",
        "metric": "statistical_parity_difference",
        "group": "group",
        "condition": null,
        "comparator": "lte",
        "threshold": 0.35
      }
    },
    {
      "id": "E4",
      "title": "Clinician training plan",
      "kind": "document",
      "payload": {
        "uri": "reports/training-plan.md",
        "sha256": null,
        "description": ""
      }
    }
  ],
  "waivers": []
} as const;
export const validateBody = [] as const;
export const coverageBody = {
  "stages": {
    "perStage": {
      "project_planning": 0,
      "problem_formulation": 0,
      "data_extraction_procurement": 1,
      "data_analysis": 1,
      "preprocessing_feature_engineering": 1,
      "model_selection_training": 0,
      "model_testing_validation": 1,
      "model_documentation": 0,
      "system_implementation": 0,
      "user_training": 1,
      "system_use_monitoring": 0,
      "model_updating_deprovisioning": 0
    },
    "uncovered": [
      "project_planning",
      "problem_formulation",
      "model_selection_training",
      "model_documentation",
      "system_implementation",
      "system_use_monitoring",
      "model_updating_deprovisioning"
    ]
  },
  "considerations": {
    "perConsideration": {
      "FC-PD-01": "unaddressed",
      "FC-PD-02": "unaddressed",
      "FC-PD-03": "addressed",
      "FC-PD-04": "addressed",
      "FC-MD-05": "addressed",
      "FC-MD-06": "unaddressed",
      "FC-MD-07": "addressed",
      "FC-MD-08": "unaddressed",
      "FC-SD-09": "unaddressed",
      "FC-SD-10": "addressed",
      "FC-SD-11": "unaddressed",
      "FC-SD-12": "unaddressed",
      "FC-SD-13": "unaddressed",
      "FC-SD-14": "unaddressed"
    },
    "addressingClaims": {
      "FC-PD-01": [],
      "FC-PD-02": [],
      "FC-PD-03": [
        "C5"
      ],
      "FC-PD-04": [
        "C2"
      ],
      "FC-MD-05": [
        "C6"
      ],
      "FC-MD-06": [],
      "FC-MD-07": [
        "C7"
      ],
      "FC-MD-08": [],
      "FC-SD-09": [],
      "FC-SD-10": [
        "C4"
      ],
      "FC-SD-11": [],
      "FC-SD-12": [],
      "FC-SD-13": [],
      "FC-SD-14": []
    }
  }
} as const;
export const coverageAfterTagBody = {
  "stages": {
    "perStage": {
      "project_planning": 0,
      "problem_formulation": 0,
      "data_extraction_procurement": 1,
      "data_analysis": 1,
      "preprocessing_feature_engineering": 1,
      "model_selection_training": 0,
      "model_testing_validation": 1,
      "model_documentation": 0,
      "system_implementation": 0,
      "user_training": 1,
      "system_use_monitoring": 0,
      "model_updating_deprovisioning": 0
    },
    "uncovered": [
      "project_planning",
      "problem_formulation",
      "model_selection_training",
      "model_documentation",
      "system_implementation",
      "system_use_monitoring",
      "model_updating_deprovisioning"
    ]
  },
  "considerations": {
    "perConsideration": {
      "FC-PD-01": "addressed",
      "FC-PD-02": "unaddressed",
      "FC-PD-03": "addressed",
      "FC-PD-04": "addressed",
      "FC-MD-05": "addressed",
      "FC-MD-06": "unaddressed",
      "FC-MD-07": "addressed",
      "FC-MD-08": "unaddressed",
      "FC-SD-09": "unaddressed",
      "FC-SD-10": "addressed",
      "FC-SD-11": "unaddressed",
      "FC-SD-12": "unaddressed",
      "FC-SD-13": "unaddressed",
      "FC-SD-14": "unaddressed"
    },
    "addressingClaims": {
      "FC-PD-01": [
        "C3"
      ],
      "FC-PD-02": [],
      "FC-PD-03": [
        "C5"
      ],
      "FC-PD-04": [
        "C2"
      ],
      "FC-MD-05": [
        "C6"
      ],
      "FC-MD-06": [],
      "FC-MD-07": [
        "C7"
      ],
      "FC-MD-08": [],
      "FC-SD-09": [],
      "FC-SD-10": [
        "C4"
      ],
      "FC-SD-11": [],
      "FC-SD-12": [],
      "FC-SD-13": [],
      "FC-SD-14": []
    }
  }
} as const;
export const evaluateBody = {
  "root": "supported",
  "claims": [
    {
      "id": "C1",
      "status": "supported",
      "attestedOnly": false
    },
    {
      "id": "C2",
      "status": "supported",
      "attestedOnly": false
    },
    {
      "id": "C5",
      "status": "supported",
      "attestedOnly": false
    },
    {
      "id": "C6",
      "status": "supported",
      "attestedOnly": true
    },
    {
      "id": "C3",
      "status": "supported",
      "attestedOnly": false
    },
    {
      "id": "C7",
      "status": "supported",
      "attestedOnly": false
    },
    {
      "id": "C4",
      "status": "supported",
      "attestedOnly": true
    }
  ],
  "evidence": [
    {
      "id": "E1",
      "verdict": "pass",
      "attested": false,
      "unverified": false,
      "value": null,
      "notes": []
    },
    {
      "id": "E2",
      "verdict": "pass",
      "attested": true,
      "unverified": false,
      "value": null,
      "notes": []
    },
    {
      "id": "E3",
      "verdict": "pass",
      "attested": false,
      "unverified": false,
      "value": 0.30000000000000004,
      "notes": []
    },
    {
      "id": "E4",
      "verdict": "pass",
      "attested": false,
      "unverified": true,
      "value": null,
      "notes": [
        "document present, no digest to verify"
      ]
    }
  ]
} as const;
export const stagesBody = [
  {
    "id": "project_planning",
    "name": "Project Planning",
    "phase": "project_design",
    "ordinal": 1
  },
  {
    "id": "problem_formulation",
    "name": "Problem Formulation",
    "phase": "project_design",
    "ordinal": 2
  },
  {
    "id": "data_extraction_procurement",
    "name": "Data Extraction or Procurement",
    "phase": "project_design",
    "ordinal": 3
  },
  {
    "id": "data_analysis",
    "name": "Data Analysis",
    "phase": "project_design",
    "ordinal": 4
  },
  {
    "id": "preprocessing_feature_engineering",
    "name": "Preprocessing and Feature Engineering",
    "phase": "model_development",
    "ordinal": 1
  },
  {
    "id": "model_selection_training",
    "name": "Model Selection and Training",
    "phase": "model_development",
    "ordinal": 2
  },
  {
    "id": "model_testing_validation",
    "name": "Model Testing and Validation",
    "phase": "model_development",
    "ordinal": 3
  },
  {
    "id": "model_documentation",
    "name": "Model Documentation",
    "phase": "model_development",
    "ordinal": 4
  },
  {
    "id": "system_implementation",
    "name": "System Implementation",
    "phase": "system_deployment",
    "ordinal": 1
  },
  {
    "id": "user_training",
    "name": "User Training",
    "phase": "system_deployment",
    "ordinal": 2
  },
  {
    "id": "system_use_monitoring",
    "name": "System Use and Monitoring",
    "phase": "system_deployment",
    "ordinal": 3
  },
  {
    "id": "model_updating_deprovisioning",
    "name": "Model Updating or Deprovisioning",
    "phase": "system_deployment",
    "ordinal": 4
  }
] as const;
export const considerationsBody = [
  {
    "id": "FC-PD-01",
    "stage": "project_planning",
    "summary": "Appropriately diverse project team",
    "prompt": "Show that the project team, and the stakeholder engagement around it, is diverse enough to surface fairness concerns early. Meeting records, team composition summaries, and participatory-design session logs are typical grounding evidence.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-PD-02",
    "stage": "problem_formulation",
    "summary": "Auxiliary harms identified",
    "prompt": "Argue that the chosen problem framing does not create side effects of its own, such as deskilling of expert users, erosion of trust, or entrenchment of reductive proxies. Name the auxiliary harms considered and how each was assessed.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-PD-03",
    "stage": "data_extraction_procurement",
    "summary": "Source data quality established",
    "prompt": "Show that the procured data is of sufficient quality and provenance for the stated problem: coverage of the affected population, completeness of records, and known collection biases all documented.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-PD-04",
    "stage": "data_analysis",
    "summary": "Data biases identified and mitigated",
    "prompt": "Demonstrate that biases in the data, such as over- or under-representation of particular groups or systematically missing values, were looked for, found or ruled out, and mitigated where found.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-MD-05",
    "stage": "preprocessing_feature_engineering",
    "summary": "Cleaning and imputation justified",
    "prompt": "Justify the cleaning and imputation choices and who made them: which records were dropped, how missing values were filled, and why the people making those calls were appropriate for the domain. Different imputation strategies shift outcomes across groups.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-MD-06",
    "stage": "model_selection_training",
    "summary": "Model and training choice justified",
    "prompt": "Give explicit reasons for the model family and training regime beyond precedent or convenience, including their consequences for explainability and group-level outcomes.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-MD-07",
    "stage": "model_testing_validation",
    "summary": "Benchmarks justified and fairness measures satisfied",
    "prompt": "Justify the choice of testing and validation measures, including any defaults inherited from tooling, and show that the selected statistical fairness measures were actually satisfied at agreed thresholds.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-MD-08",
    "stage": "model_documentation",
    "summary": "Documentation fits stakeholder needs",
    "prompt": "Show that model documentation matches the needs and competencies of affected stakeholders, and that the chosen explainability method is itself justified; a poor choice can mask unfair behaviour.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-09",
    "stage": "system_implementation",
    "summary": "Workflow integration burden is fair",
    "prompt": "Show that integrating the system into existing working practices does not clash with them or shift an unfair adaptation burden onto operational staff or other affected parties.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-10",
    "stage": "user_training",
    "summary": "Users trained and roles unambiguous",
    "prompt": "Demonstrate that users receive adequate training and that the respective roles of the human and the system, including who decides when they disagree, are clearly and unambiguously set out.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-11",
    "stage": "system_use_monitoring",
    "summary": "Fairness monitored while in use",
    "prompt": "Provide evidence that the system continues to meet its fairness goals during operation, not just at release, with monitoring that can detect drift in group-level outcomes.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-12",
    "stage": "system_use_monitoring",
    "summary": "Monitoring responsibility assigned and justified",
    "prompt": "Name who is responsible for in-use monitoring and justify why placing that duty on them is fair, including any compensation or workload relief that makes the role sustainable.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-13",
    "stage": "model_updating_deprovisioning",
    "summary": "Update and retirement thresholds set",
    "prompt": "Show that concrete thresholds exist for when the system must be updated or withdrawn, so the decision does not rest on ad-hoc judgement by whoever happens to notice degradation.",
    "defaultSeverity": "warning"
  },
  {
    "id": "FC-SD-14",
    "stage": "model_updating_deprovisioning",
    "summary": "Qualified team can initiate updates",
    "prompt": "Demonstrate that an appropriate and qualified individual or team is able to initiate the update or deprovisioning process, with access to the performance information that decision needs.",
    "defaultSeverity": "warning"
  }
] as const;
export const dslText = "case \"Fair CDSS\" {\n  goal C1 \"The AI-enabled CDSS is fair\" {\n    claim C2 \"The CDSS does not discriminate against patients\" stage(data_analysis) considers(FC-PD-04) {\n      claim C5 \"Source data quality is sufficient for the patient population\" stage(data_extraction_procurement) considers(FC-PD-03) {\n        by E1;\n      }\n      claim C6 \"Data cleaning and imputation choices are justified\" stage(preprocessing_feature_engineering) considers(FC-MD-05) {\n        by E2;\n      }\n    }\n    claim C3 \"Chosen statistical fairness measures are satisfied\" {\n      claim C7 \"Selection rates are comparable across patient groups\" stage(model_testing_validation) considers(FC-MD-07) {\n        by E3;\n      }\n    }\n    claim C4 \"Clinicians are trained and roles are clearly assigned\" stage(user_training) considers(FC-SD-10) {\n      by E4;\n    }\n  }\n  evidence E1 \"Data quality audit\" kind(document) {\n    uri = \"reports/data-quality.md\";\n    sha256 = \"2e5ea3596d9a507d5ebe073ac52feefb45f9d0d34011743baaa9167cc0022964\";\n  }\n  evidence E2 \"Cleaning review minutes\" kind(record) {\n    description = \"Imputation choices walked through with clinical staff\";\n    date = \"2024-05-14\";\n    participant = \"clinical lead\";\n    participant = \"data engineer\";\n    participant = \"patient representative\";\n  }\n  evidence E3 \"Selection-rate parity check\" kind(metric) {\n    dataset = \"outcomes\";\n    metric = \"statistical_parity_difference\";\n    group = \"group\";\n    comparator = \"<=\";\n    threshold = 0.35;\n  }\n  evidence E4 \"Clinician training plan\" kind(document) {\n    uri = \"reports/training-plan.md\";\n  }\n}\n" as const;
