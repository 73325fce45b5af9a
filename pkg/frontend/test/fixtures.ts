// Captured from the real backend (kfactors HTTP service); elapsed_ms zeroed.
export const fixtures = {
  "check_not_graphic": {
    "elapsed_ms": 0.1,
    "graphic": false,
    "rao_connected": true,
    "seed": null,
    "version": "0.1.0"
  },
  "generate_connected": {
    "elapsed_ms": 0.1,
    "mode": "connected",
    "n": 8,
    "params": {
      "a": 6,
      "b": 5,
      "k": 2,
      "max_retries": 1000
    },
    "prng": "mt19937",
    "seed": 1,
    "sequence": [
      6,
      6,
      6,
      6,
      5,
      5,
      5,
      5
    ],
    "version": "0.1.0"
  },
  "generate_disconnected": {
    "elapsed_ms": 0.1,
    "mode": "disconnected",
    "n": 16,
    "params": {
      "k": 2,
      "n": 16,
      "variant": "general",
      "x": null
    },
    "prng": "mt19937",
    "seed": 1,
    "sequence": [
      15,
      15,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      2,
      2
    ],
    "version": "0.1.0"
  },
  "kfactor_six_vertices": {
    "counters": {
      "candidate_scans": 8,
      "initial_shared_edges": 1,
      "max_scans_per_switch": 8,
      "switch_count": 1
    },
    "d_minus_k_graph": {
      "edges": [
        [
          0,
          1
        ]
      ],
      "n": 6
    },
    "elapsed_ms": 0.1,
    "factor": {
      "edges": [
        [
          0,
          3
        ],
        [
          0,
          5
        ],
        [
          1,
          4
        ],
        [
          1,
          5
        ],
        [
          2,
          3
        ],
        [
          2,
          4
        ]
      ],
      "n": 6
    },
    "k": 2,
    "realization": {
      "edges": [
        [
          0,
          1
        ],
        [
          0,
          3
        ],
        [
          0,
          5
        ],
        [
          1,
          4
        ],
        [
          1,
          5
        ],
        [
          2,
          3
        ],
        [
          2,
          4
        ]
      ],
      "n": 6
    },
    "report": {
      "factor_components": [
        [
          0,
          1,
          2,
          3,
          4,
          5
        ]
      ],
      "factor_connected": true,
      "k": 2,
      "rao_verdict": "connected_factorable",
      "sequence": [
        3,
        3,
        2,
        2,
        2,
        2
      ],
      "witness_s": null
    },
    "seed": null,
    "sequence": [
      3,
      3,
      2,
      2,
      2,
      2
    ],
    "trace": [
      {
        "added": [
          [
            1,
            2
          ],
          [
            0,
            4
          ]
        ],
        "removed": [
          [
            0,
            1
          ],
          [
            2,
            4
          ]
        ],
        "target": "B"
      }
    ],
    "version": "0.1.0"
  },
  "kfactor_family": {
    "counters": {
      "candidate_scans": 63,
      "initial_shared_edges": 4,
      "max_scans_per_switch": 20,
      "switch_count": 4
    },
    "d_minus_k_graph": {
      "edges": [
        [
          0,
          1
        ],
        [
          0,
          2
        ],
        [
          0,
          3
        ],
        [
          0,
          4
        ],
        [
          0,
          5
        ],
        [
          0,
          6
        ],
        [
          0,
          7
        ],
        [
          0,
          8
        ],
        [
          0,
          9
        ],
        [
          0,
          10
        ],
        [
          0,
          11
        ],
        [
          0,
          12
        ],
        [
          0,
          13
        ],
        [
          1,
          2
        ],
        [
          1,
          3
        ],
        [
          1,
          4
        ],
        [
          1,
          5
        ],
        [
          1,
          6
        ],
        [
          1,
          7
        ],
        [
          1,
          8
        ],
        [
          1,
          9
        ],
        [
          1,
          10
        ],
        [
          1,
          11
        ],
        [
          1,
          12
        ],
        [
          1,
          13
        ],
        [
          2,
          3
        ],
        [
          2,
          4
        ],
        [
          3,
          4
        ],
        [
          5,
          6
        ],
        [
          5,
          7
        ],
        [
          6,
          7
        ],
        [
          8,
          9
        ],
        [
          8,
          10
        ],
        [
          9,
          10
        ],
        [
          11,
          12
        ],
        [
          11,
          13
        ],
        [
          12,
          13
        ]
      ],
      "n": 16
    },
    "elapsed_ms": 0.1,
    "factor": {
      "edges": [
        [
          0,
          14
        ],
        [
          0,
          15
        ],
        [
          1,
          14
        ],
        [
          1,
          15
        ],
        [
          2,
          7
        ],
        [
          2,
          12
        ],
        [
          3,
          9
        ],
        [
          3,
          11
        ],
        [
          4,
          12
        ],
        [
          4,
          13
        ],
        [
          5,
          8
        ],
        [
          5,
          13
        ],
        [
          6,
          9
        ],
        [
          6,
          10
        ],
        [
          7,
          10
        ],
        [
          8,
          11
        ]
      ],
      "n": 16
    },
    "k": 2,
    "realization": {
      "edges": [
        [
          0,
          1
        ],
        [
          0,
          2
        ],
        [
          0,
          3
        ],
        [
          0,
          4
        ],
        [
          0,
          5
        ],
        [
          0,
          6
        ],
        [
          0,
          7
        ],
        [
          0,
          8
        ],
        [
          0,
          9
        ],
        [
          0,
          10
        ],
        [
          0,
          11
        ],
        [
          0,
          12
        ],
        [
          0,
          13
        ],
        [
          0,
          14
        ],
        [
          0,
          15
        ],
        [
          1,
          2
        ],
        [
          1,
          3
        ],
        [
          1,
          4
        ],
        [
          1,
          5
        ],
        [
          1,
          6
        ],
        [
          1,
          7
        ],
        [
          1,
          8
        ],
        [
          1,
          9
        ],
        [
          1,
          10
        ],
        [
          1,
          11
        ],
        [
          1,
          12
        ],
        [
          1,
          13
        ],
        [
          1,
          14
        ],
        [
          1,
          15
        ],
        [
          2,
          3
        ],
        [
          2,
          4
        ],
        [
          2,
          7
        ],
        [
          2,
          12
        ],
        [
          3,
          4
        ],
        [
          3,
          9
        ],
        [
          3,
          11
        ],
        [
          4,
          12
        ],
        [
          4,
          13
        ],
        [
          5,
          6
        ],
        [
          5,
          7
        ],
        [
          5,
          8
        ],
        [
          5,
          13
        ],
        [
          6,
          7
        ],
        [
          6,
          9
        ],
        [
          6,
          10
        ],
        [
          7,
          10
        ],
        [
          8,
          9
        ],
        [
          8,
          10
        ],
        [
          8,
          11
        ],
        [
          9,
          10
        ],
        [
          11,
          12
        ],
        [
          11,
          13
        ],
        [
          12,
          13
        ]
      ],
      "n": 16
    },
    "report": {
      "factor_components": [
        [
          0,
          1,
          14,
          15
        ],
        [
          2,
          3,
          4,
          5,
          6,
          7,
          8,
          9,
          10,
          11,
          12,
          13
        ]
      ],
      "factor_connected": false,
      "k": 2,
      "rao_verdict": "not_connected_factorable",
      "sequence": [
        15,
        15,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        6,
        2,
        2
      ],
      "witness_s": 2
    },
    "seed": null,
    "sequence": [
      15,
      15,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      6,
      2,
      2
    ],
    "trace": [
      {
        "added": [
          [
            3,
            6
          ],
          [
            2,
            10
          ]
        ],
        "removed": [
          [
            2,
            3
          ],
          [
            6,
            10
          ]
        ],
        "target": "B"
      },
      {
        "added": [
          [
            4,
            7
          ],
          [
            2,
            11
          ]
        ],
        "removed": [
          [
            2,
            4
          ],
          [
            7,
            11
          ]
        ],
        "target": "B"
      },
      {
        "added": [
          [
            2,
            13
          ],
          [
            7,
            11
          ]
        ],
        "removed": [
          [
            11,
            13
          ],
          [
            2,
            7
          ]
        ],
        "target": "B"
      },
      {
        "added": [
          [
            3,
            13
          ],
          [
            9,
            12
          ]
        ],
        "removed": [
          [
            12,
            13
          ],
          [
            3,
            9
          ]
        ],
        "target": "B"
      }
    ],
    "version": "0.1.0"
  }
};
