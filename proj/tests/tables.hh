// Copyright 2026 The roommates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROOMMATES_TESTS_TABLES_HH
#define ROOMMATES_TESTS_TABLES_HH

namespace tables
{
    /* Phase-1 table of the 12-person example. */
    inline const char * twelve_phase1 = R"(
        1: 7 4 6 9 10
        2: 6 9
        3: 9 8 12 5
        4: 12 10 7 6 1 8 5 11
        5: 3 9 4 8 7
        6: 8 4 1 10 2
        7: 5 10 4 1
        8: 10 3 5 4 9 6
        9: 2 1 5 8 3
        10: 1 4 11 7 6 8
        11: 4 10 12
        12: 11 3 4
    )";

    /* Preference prefixes of the paw construction; braces mark noise. */
    inline const char * paw_prefixes = R"(
        Q1: P1 P2
        Q2: P2 P1
        P1: Q2 P3 {P4} Q1
        P2: Q1 P4 Q2
        Q3: P3 P4
        Q4: P4 P5
        Q5: P5 P6
        Q6: P6 P7
        Q7: P7 P8
        Q8: P8 {P7 P6 P5 P4} P3
        P3: Q8 P1 {P14 Q7 P13 Q6 P10 Q5 P9 Q4 P2} Q3
        P4: Q3 P2 Q4
        P5: Q4 P9 Q5
        P6: Q5 P10 Q6
        P7: Q6 P13 Q7
        P8: Q7 P14 Q8
        Q9: P9 P10
        Q10: P10 P11
        Q11: P11 P12
        Q12: P12 {P11 P10} P9
        P9: Q12 P5 {P16 Q11 P15 Q10 P6} Q9
        P10: Q9 P6 Q10
        P11: Q10 P15 Q11
        P12: Q11 P16 Q12
        Q13: P13 P14
        Q14: P14 P15
        Q15: P15 P16
        Q16: P16 {P15 P14} P13
        P13: Q16 P7 {P12 Q15 P11 Q14 P8} Q13
        P14: Q13 P8 Q14
        P15: Q14 P11 Q15
        P16: Q15 P12 Q16
    )";

    /* Its Phase-1 short lists. */
    inline const char * paw_short_lists = R"(
        Q1: P1 P2
        Q2: P2 P1
        P1: Q2 P3 Q1
        P2: Q1 P4 Q2
        Q3: P3 P4
        Q4: P4 P5
        Q5: P5 P6
        Q6: P6 P7
        Q7: P7 P8
        Q8: P8 P3
        P3: Q8 P1 Q3
        P4: Q3 P2 Q4
        P5: Q4 P9 Q5
        P6: Q5 P10 Q6
        P7: Q6 P13 Q7
        P8: Q7 P14 Q8
        Q9: P9 P10
        Q10: P10 P11
        Q11: P11 P12
        Q12: P12 P9
        P9: Q12 P5 Q9
        P10: Q9 P6 Q10
        P11: Q10 P15 Q11
        P12: Q11 P16 Q12
        Q13: P13 P14
        Q14: P14 P15
        Q15: P15 P16
        Q16: P16 P13
        P13: Q16 P7 Q13
        P14: Q13 P8 Q14
        P15: Q14 P11 Q15
        P16: Q15 P12 Q16
    )";
}

#endif
