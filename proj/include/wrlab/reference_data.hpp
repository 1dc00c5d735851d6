#pragma once

// Published values for the integral deformed families, kept as printed.

#include <array>
#include <span>

#include "wrlab/deform.hpp"

namespace wrlab {

// E8 rows: delta and the minimum of the volume-one rescaling, as decimal
// strings with six significant figures (trailing zeros dropped).
struct E8ReferenceRow {
  PellTriple triple;
  const char* delta;
  const char* lambda1_sq_normalized;
};

// D_n rows: delta = 2^(-n/2 - two_exponent) q^n p^(3-n) / denominator.
struct DnReferenceRow {
  PellTriple triple;
  int two_exponent;
  long denominator;
};

inline std::span<const E8ReferenceRow> e8_reference_rows() {
  static constexpr std::array<E8ReferenceRow, 21> rows{{
      {{7, 5, 1}, "0.0102162", "1.27169"},
      {{17, 13, 7}, "0.0124829", "1.33702"},
      {{31, 25, 17}, "0.0159616", "1.42177"},
      {{49, 41, 31}, "0.0192763", "1.49045"},
      {{71, 61, 49}, "0.0222471", "1.54482"},
      {{97, 85, 71}, "0.0248757", "1.58856"},
      {{127, 113, 97}, "0.0272007", "1.62445"},
      {{161, 145, 127}, "0.0292647", "1.65442"},
      {{241, 221, 199}, "0.0327571", "1.70171"},
      {{337, 313, 287}, "0.0355924", "1.7374"},
      {{449, 421, 391}, "0.0379372", "1.76533"},
      {{647, 613, 577}, "0.0407789", "1.7975"},
      {{881, 841, 799}, "0.0430324", "1.82183"},
      {{1249, 1201, 1151}, "0.0453987", "1.84638"},
      {{1799, 1741, 1681}, "0.0476548", "1.8689"},
      {{2591, 2521, 2449}, "0.0496839", "1.88849"},
      {{4049, 3961, 3871}, "0.0518646", "1.90888"},
      {{6727, 6613, 6497}, "0.0539629", "1.9279"},
      {{30257, 30013, 29767}, "0.0582025", "1.9647"},
      {{95047, 94613, 94177}, "0.0600098", "1.97977"},
      {{301087, 300313, 299537}, "0.0610791", "1.98853"},
  }};
  return rows;
}

inline std::span<const DnReferenceRow> dn_reference_rows() {
  static constexpr std::array<DnReferenceRow, 12> rows{{
      {{7, 5, 1}, 3, 43},
      {{17, 13, 7}, 3, 657},
      {{31, 25, 17}, 4, 2169},
      {{49, 41, 31}, 4, 9215},
      {{71, 61, 49}, 3, 59445},
      {{97, 85, 71}, 3, 158823},
      {{127, 113, 97}, 5, 92533},
      {{161, 145, 127}, 5, 194427},
      {{199, 181, 161}, 3, 1506735},
      {{287, 265, 241}, 4, 2352339},
      {{391, 365, 337}, 3, 12256153},
      {{511, 481, 449}, 6, 3499245},
  }};
  return rows;
}

}  // namespace wrlab
