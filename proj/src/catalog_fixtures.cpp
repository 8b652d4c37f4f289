#include "facekit/catalog.hpp"

namespace facekit {
namespace fixtures {

const char* k_fibonacci = R"fixture(
{
 "conductor": 5,
 "labels": [
  "1",
  "t"
 ],
 "unit": "1",
 "dual": {
  "1": "1",
  "t": "t"
 },
 "N": [
  {
   "a": "1",
   "b": "1",
   "c": "1",
   "m": 1
  },
  {
   "a": "1",
   "b": "t",
   "c": "t",
   "m": 1
  },
  {
   "a": "t",
   "b": "1",
   "c": "t",
   "m": 1
  },
  {
   "a": "t",
   "b": "t",
   "c": "1",
   "m": 1
  },
  {
   "a": "t",
   "b": "t",
   "c": "t",
   "m": 1
  }
 ],
 "F": [
  {
   "a": "1",
   "b": "1",
   "c": "1",
   "d": "1",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "1",
   "c": "t",
   "d": "t",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "t",
   "c": "1",
   "d": "t",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "t",
   "c": "t",
   "d": "1",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "t",
   "c": "t",
   "d": "t",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "1",
   "c": "1",
   "d": "t",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "1",
   "c": "t",
   "d": "1",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "1",
   "c": "t",
   "d": "t",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "t",
   "c": "1",
   "d": "1",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "t",
   "c": "1",
   "d": "t",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "t",
   "c": "t",
   "d": "1",
   "rows": [
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "t",
   "b": "t",
   "c": "t",
   "d": "t",
   "rows": [
    [
     "1",
     0,
     0
    ],
    [
     "t",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ],
    [
     "t",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1 - q^2 - q^3",
     "-1 - q^2 - q^3"
    ],
    [
     "1",
     "1 + q^2 + q^3"
    ]
   ]
  }
 ]
}
)fixture";

const char* k_ising = R"fixture(
{
 "conductor": 8,
 "labels": [
  "1",
  "sigma",
  "psi"
 ],
 "unit": "1",
 "dual": {
  "1": "1",
  "sigma": "sigma",
  "psi": "psi"
 },
 "N": [
  {
   "a": "1",
   "b": "1",
   "c": "1",
   "m": 1
  },
  {
   "a": "1",
   "b": "sigma",
   "c": "sigma",
   "m": 1
  },
  {
   "a": "1",
   "b": "psi",
   "c": "psi",
   "m": 1
  },
  {
   "a": "sigma",
   "b": "1",
   "c": "sigma",
   "m": 1
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "1",
   "m": 1
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "psi",
   "m": 1
  },
  {
   "a": "sigma",
   "b": "psi",
   "c": "sigma",
   "m": 1
  },
  {
   "a": "psi",
   "b": "1",
   "c": "psi",
   "m": 1
  },
  {
   "a": "psi",
   "b": "sigma",
   "c": "sigma",
   "m": 1
  },
  {
   "a": "psi",
   "b": "psi",
   "c": "1",
   "m": 1
  }
 ],
 "F": [
  {
   "a": "1",
   "b": "1",
   "c": "1",
   "d": "1",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "1",
   "c": "sigma",
   "d": "sigma",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "1",
   "c": "psi",
   "d": "psi",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "sigma",
   "c": "1",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "sigma",
   "c": "sigma",
   "d": "1",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "sigma",
   "c": "sigma",
   "d": "psi",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "sigma",
   "c": "psi",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "psi",
   "c": "1",
   "d": "psi",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "psi",
   "c": "sigma",
   "d": "sigma",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "1",
   "b": "psi",
   "c": "psi",
   "d": "1",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "1",
   "c": "1",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "1",
   "c": "sigma",
   "d": "1",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "1",
   "c": "sigma",
   "d": "psi",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "1",
   "c": "psi",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "1",
   "d": "1",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "1",
   "d": "psi",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "sigma",
   "d": "sigma",
   "rows": [
    [
     "1",
     0,
     0
    ],
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ],
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1/2*q - 1/2*q^3",
     "1/2*q - 1/2*q^3"
    ],
    [
     "1/2*q - 1/2*q^3",
     "-1/2*q + 1/2*q^3"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "psi",
   "d": "1",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "sigma",
   "c": "psi",
   "d": "psi",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "psi",
   "c": "1",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "psi",
   "c": "sigma",
   "d": "1",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "psi",
   "c": "sigma",
   "d": "psi",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "sigma",
   "b": "psi",
   "c": "psi",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "1",
   "c": "1",
   "d": "psi",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "1",
   "c": "sigma",
   "d": "sigma",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "1",
   "c": "psi",
   "d": "1",
   "rows": [
    [
     "psi",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "sigma",
   "c": "1",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "sigma",
   "c": "sigma",
   "d": "1",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "sigma",
   "c": "sigma",
   "d": "psi",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "sigma",
   "c": "psi",
   "d": "sigma",
   "rows": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "psi",
   "c": "1",
   "d": "1",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "psi",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "psi",
   "c": "sigma",
   "d": "sigma",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sigma",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "psi",
   "b": "psi",
   "c": "psi",
   "d": "psi",
   "rows": [
    [
     "1",
     0,
     0
    ]
   ],
   "cols": [
    [
     "1",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  }
 ]
}
)fixture";

const char* k_rep_s3 = R"fixture(
{
 "conductor": 1,
 "labels": [
  "triv",
  "sgn",
  "std"
 ],
 "unit": "triv",
 "dual": {
  "triv": "triv",
  "sgn": "sgn",
  "std": "std"
 },
 "N": [
  {
   "a": "triv",
   "b": "triv",
   "c": "triv",
   "m": 1
  },
  {
   "a": "triv",
   "b": "sgn",
   "c": "sgn",
   "m": 1
  },
  {
   "a": "triv",
   "b": "std",
   "c": "std",
   "m": 1
  },
  {
   "a": "sgn",
   "b": "triv",
   "c": "sgn",
   "m": 1
  },
  {
   "a": "sgn",
   "b": "sgn",
   "c": "triv",
   "m": 1
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "std",
   "m": 1
  },
  {
   "a": "std",
   "b": "triv",
   "c": "std",
   "m": 1
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "std",
   "m": 1
  },
  {
   "a": "std",
   "b": "std",
   "c": "triv",
   "m": 1
  },
  {
   "a": "std",
   "b": "std",
   "c": "sgn",
   "m": 1
  },
  {
   "a": "std",
   "b": "std",
   "c": "std",
   "m": 1
  }
 ],
 "F": [
  {
   "a": "triv",
   "b": "triv",
   "c": "triv",
   "d": "triv",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "triv",
   "c": "sgn",
   "d": "sgn",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "triv",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "sgn",
   "c": "triv",
   "d": "sgn",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "sgn",
   "c": "sgn",
   "d": "triv",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "sgn",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "std",
   "c": "triv",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "std",
   "c": "sgn",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "std",
   "c": "std",
   "d": "triv",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "std",
   "c": "std",
   "d": "sgn",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "triv",
   "b": "std",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "triv",
   "c": "triv",
   "d": "sgn",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "triv",
   "c": "sgn",
   "d": "triv",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "triv",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "sgn",
   "c": "triv",
   "d": "triv",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "sgn",
   "c": "sgn",
   "d": "sgn",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "sgn",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1/3"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "triv",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "sgn",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "std",
   "d": "triv",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-3"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "std",
   "d": "sgn",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "sgn",
   "b": "std",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "triv",
   "c": "triv",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "triv",
   "c": "sgn",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "triv",
   "c": "std",
   "d": "triv",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "triv",
   "c": "std",
   "d": "sgn",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "triv",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "triv",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "sgn",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-3"
    ]
   ]
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "std",
   "d": "triv",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "std",
   "d": "sgn",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "sgn",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "triv",
   "d": "triv",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "triv",
   "d": "sgn",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "triv",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "sgn",
   "d": "triv",
   "rows": [
    [
     "sgn",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1/3"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "sgn",
   "d": "sgn",
   "rows": [
    [
     "triv",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "sgn",
   "d": "std",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "std",
   "d": "triv",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "std",
   "d": "sgn",
   "rows": [
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "-1"
    ]
   ]
  },
  {
   "a": "std",
   "b": "std",
   "c": "std",
   "d": "std",
   "rows": [
    [
     "triv",
     0,
     0
    ],
    [
     "sgn",
     0,
     0
    ],
    [
     "std",
     0,
     0
    ]
   ],
   "cols": [
    [
     "triv",
     0,
     0
    ],
    [
     "sgn",
     0,
     0
    ],
    [
     "std",
     0,
     0
    ]
   ],
   "mat": [
    [
     "1/2",
     "-1/2",
     "1"
    ],
    [
     "1/2",
     "-1/2",
     "-1"
    ],
    [
     "1/2",
     "1/2",
     "0"
    ]
   ]
  }
 ]
}
)fixture";

}  // namespace fixtures
}  // namespace facekit
