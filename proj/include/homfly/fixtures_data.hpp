#pragma once
/**
 * Embedded copies of the bundled chain-complex fixtures found
 * under data/fixtures.  Regenerate with tools/embed_fixtures.py
 * after editing the data files; a test asserts byte equality.
 */

#include <array>
#include <string_view>
#include <utility>

namespace homfly::fixtures_data {

inline constexpr std::string_view z0_total = R"FIX(GEN exaf2 0 0
GEN d2g2 0 0
GEN exaf1 1 -4
GEN eyf2 1 0
GEN exbf2 1 0
GEN d1g2 1 -2
GEN d2g1 1 -2
GEN eyf1 2 -4
GEN exbf1 2 -4
GEN exgf2 2 -2
GEN d1g1 2 -4
GEN exgf1 3 -6
DIF exaf2 eyf2 1
DIF exaf2 exaf1 U3*U4+U1*U2
DIF exaf2 exbf2 1
DIF exaf2 d2g1 U1
DIF exaf2 d1g2 U4
DIF d2g2 eyf2 1
DIF d2g2 d1g2 U2
DIF d2g2 d2g1 U3
DIF exaf1 eyf1 1
DIF exaf1 exbf1 1
DIF exaf1 d1g1 1
DIF eyf2 eyf1 U3*U4+U1*U2
DIF eyf2 exgf2 U3+U2
DIF exbf2 exbf1 U3*U4+U1*U2
DIF exbf2 exgf2 U4+U3+U2+U1
DIF d1g2 d1g1 U3
DIF d1g2 exgf2 1
DIF d1g2 eyf1 U1
DIF d2g1 d1g1 U2
DIF d2g1 exgf2 1
DIF d2g1 eyf1 U4
DIF eyf1 exgf1 U3+U2
DIF exbf1 exgf1 U4+U3+U2+U1
DIF exgf2 exgf1 U3*U4+U1*U2
DIF d1g1 exgf1 U4+U1
)FIX";

inline constexpr std::string_view z0_cancelled = R"FIX(GEN d2g2 0 0
GEN exbf2 1 0
GEN d1g2 1 -2
GEN d2g1 1 -2
GEN exbf1 2 -4
GEN exgf2 2 -2
GEN d1g1 2 -4
GEN exgf1 3 -6
DIF d2g2 exbf2 1
DIF d2g2 d2g1 U3+U1
DIF d2g2 d1g2 U4+U2
DIF exbf2 exbf1 U3*U4+U1*U2
DIF exbf2 exgf2 U4+U3+U2+U1
DIF d1g2 d1g1 U3+U1
DIF d1g2 exgf2 1
DIF d1g2 exbf1 U1
DIF d2g1 d1g1 U4+U2
DIF d2g1 exgf2 1
DIF d2g1 exbf1 U4
DIF exbf1 exgf1 U4+U3+U2+U1
DIF exgf2 exgf1 U3*U4+U1*U2
DIF d1g1 exgf1 U4+U1
)FIX";

inline constexpr std::string_view z1_total = R"FIX(GEN a2eaj2 0 0
GEN b2g2j2 0 0
GEN a1eaj2 1 -2
GEN a2eaj1 1 -2
GEN a2e2j2 1 0
GEN a2ebj2 1 0
GEN b1g2j2 1 -2
GEN b2g2j1 1 -2
GEN b2g1j2 1 -2
GEN a1eaj1 2 -4
GEN a1e2j2 2 -2
GEN a2e2j1 2 -2
GEN a1ebj2 2 -2
GEN a2ebj1 2 -2
GEN b1g2j1 2 -4
GEN b2g1j1 2 -4
GEN b1g1j2 2 -4
GEN a2egj2 2 -2
GEN a1e2j1 3 -4
GEN a1ebj1 3 -4
GEN a2egj1 3 -4
GEN a1egj2 3 -4
GEN b1g1j1 3 -6
GEN a1egj1 4 -6
DIF a2eaj2 a1eaj2 U2
DIF a2eaj2 a2eaj1 U4
DIF a2eaj2 a2e2j2 1
DIF a2eaj2 a2ebj2 1
DIF a2eaj2 b2g1j2 U1
DIF b2g2j2 b1g2j2 U2
DIF b2g2j2 b2g2j1 U4
DIF b2g2j2 b2g1j2 U3
DIF b2g2j2 a2e2j2 1
DIF a1eaj2 a1eaj1 U4
DIF a1eaj2 a1e2j2 1
DIF a1eaj2 a1ebj2 1
DIF a1eaj2 b1g1j2 U1
DIF a2eaj1 a1eaj1 U2
DIF a2eaj1 a2e2j1 1
DIF a2eaj1 a2ebj1 1
DIF a2eaj1 b2g1j1 U1
DIF a2eaj1 a2egj2 1
DIF a2e2j2 a1e2j2 U2
DIF a2e2j2 a2e2j1 U4
DIF a2e2j2 a2egj2 U3+U2
DIF a2ebj2 a1ebj2 U2
DIF a2ebj2 a2ebj1 U4
DIF a2ebj2 a2egj2 U4+U3+U2+U1
DIF b1g2j2 b1g2j1 U4
DIF b1g2j2 b1g1j2 U3
DIF b1g2j2 a2egj2 1
DIF b1g2j2 a1e2j2 1
DIF b2g2j1 b1g2j1 U2
DIF b2g2j1 b2g1j1 U3
DIF b2g2j1 a2e2j1 1
DIF b2g1j2 b1g1j2 U2
DIF b2g1j2 b2g1j1 U4
DIF b2g1j2 a2egj2 1
DIF a1eaj1 a1e2j1 1
DIF a1eaj1 a1ebj1 1
DIF a1eaj1 b1g1j1 U1
DIF a1eaj1 a1egj2 1
DIF a1e2j2 a1e2j1 U4
DIF a1e2j2 a1egj2 U3+U2
DIF a2e2j1 a1e2j1 U2
DIF a2e2j1 a2egj1 U3+U2
DIF a1ebj2 a1ebj1 U4
DIF a1ebj2 a1egj2 U4+U3+U2+U1
DIF a2ebj1 a1ebj1 U2
DIF a2ebj1 a2egj1 U4+U3+U2+U1
DIF b1g2j1 b1g1j1 U3
DIF b1g2j1 a2egj1 1
DIF b1g2j1 a1e2j1 1
DIF b2g1j1 b1g1j1 U2
DIF b2g1j1 a2egj1 1
DIF b1g1j2 b1g1j1 U4
DIF b1g1j2 a1egj2 1
DIF a2egj2 a1egj2 U2
DIF a2egj2 a2egj1 U4
DIF a1e2j1 a1egj1 U3+U2
DIF a1ebj1 a1egj1 U4+U3+U2+U1
DIF a2egj1 a1egj1 U2
DIF a1egj2 a1egj1 U4
DIF b1g1j1 a1egj1 1
)FIX";

inline constexpr std::string_view z1_cancelled = R"FIX(GEN b2g2j2 0 0
GEN b1g2j2 1 -2
GEN b2g2j1 1 -2
GEN b2g1j2 1 -2
GEN a2ebj2 1 0
GEN b1g2j1 2 -4
GEN b2g1j1 2 -4
GEN b1g1j2 2 -4
GEN a1ebj2 2 -2
GEN a2ebj1 2 -2
GEN a2egj2 2 -2
GEN b1g1j1 3 -6
GEN a1ebj1 3 -4
GEN a2egj1 3 -4
GEN a1egj2 3 -4
GEN a1egj1 4 -6
DIF b2g2j2 b1g2j2 U2
DIF b2g2j2 b2g2j1 U4
DIF b2g2j2 b2g1j2 U3+U1
DIF b2g2j2 a2ebj2 1
DIF b1g2j2 b1g2j1 U4
DIF b1g2j2 b1g1j2 U3+U1
DIF b1g2j2 a2egj2 1
DIF b1g2j2 a1ebj2 1
DIF b2g2j1 b1g2j1 U2
DIF b2g2j1 b2g1j1 U3+U1
DIF b2g2j1 a2ebj1 1
DIF b2g2j1 a2egj2 1
DIF b2g1j2 b1g1j2 U2
DIF b2g1j2 b2g1j1 U4
DIF b2g1j2 a2egj2 1
DIF a2ebj2 a1ebj2 U2
DIF a2ebj2 a2ebj1 U4
DIF a2ebj2 a2egj2 U4+U3+U2+U1
DIF b1g2j1 b1g1j1 U3+U1
DIF b1g2j1 a2egj1 1
DIF b1g2j1 a1ebj1 1
DIF b1g2j1 a1egj2 1
DIF b2g1j1 b1g1j1 U2
DIF b2g1j1 a2egj1 1
DIF b1g1j2 b1g1j1 U4
DIF b1g1j2 a1egj2 1
DIF a1ebj2 a1ebj1 U4
DIF a1ebj2 a1egj2 U4+U3+U2+U1
DIF a2ebj1 a1ebj1 U2
DIF a2ebj1 a2egj1 U4+U3+U2+U1
DIF a2egj2 a1egj2 U2
DIF a2egj2 a2egj1 U4
DIF b1g1j1 a1egj1 1
DIF a1ebj1 a1egj1 U4+U3+U2+U1
DIF a2egj1 a1egj1 U2
DIF a1egj2 a1egj1 U4
)FIX";

inline constexpr std::string_view z2_total = R"FIX(GEN c2eai2 0 -2
GEN c2d2h2 0 0
GEN c1eai2 1 -4
GEN c2eai1 1 -4
GEN c2e2i2 1 -2
GEN c2ebi2 1 -2
GEN c2d1h2 1 -2
GEN c1d2h2 1 -2
GEN c2d2h1 1 -2
GEN c1eai1 2 -6
GEN c1e2i2 2 -4
GEN c2e2i1 2 -4
GEN c1ebi2 2 -4
GEN c2ebi1 2 -4
GEN c1d1h2 2 -4
GEN c1d2h1 2 -4
GEN c2d1h1 2 -4
GEN c2egi2 2 -4
GEN c1e2i1 3 -6
GEN c1ebi1 3 -6
GEN c2egi1 3 -6
GEN c1egi2 3 -6
GEN c1d1h1 3 -6
GEN c1egi1 4 -8
DIF c2eai2 c1eai2 U1
DIF c2eai2 c2eai1 U3
DIF c2eai2 c2d1h2 1
DIF c2eai2 c2ebi2 1
DIF c2eai2 c2e2i2 1
DIF c2d2h2 c1d2h2 U1
DIF c2d2h2 c2d2h1 U3
DIF c2d2h2 c2d1h2 U2
DIF c2d2h2 c2e2i2 U4
DIF c1eai2 c1eai1 U3
DIF c1eai2 c1d1h2 1
DIF c1eai2 c1ebi2 1
DIF c1eai2 c1e2i2 1
DIF c1eai2 c2egi2 1
DIF c2eai1 c1eai1 U1
DIF c2eai1 c2d1h1 1
DIF c2eai1 c2ebi1 1
DIF c2eai1 c2e2i1 1
DIF c2e2i2 c1e2i2 U1
DIF c2e2i2 c2e2i1 U3
DIF c2e2i2 c2egi2 U3+U2
DIF c2ebi2 c1ebi2 U1
DIF c2ebi2 c2ebi1 U3
DIF c2ebi2 c2egi2 U4+U3+U2+U1
DIF c2d1h2 c1d1h2 U1
DIF c2d1h2 c2d1h1 U3
DIF c2d1h2 c2egi2 U4
DIF c1d2h2 c1d2h1 U3
DIF c1d2h2 c1d1h2 U2
DIF c1d2h2 c1e2i2 U4
DIF c2d2h1 c1d2h1 U1
DIF c2d2h1 c2d1h1 U2
DIF c2d2h1 c2e2i1 U4
DIF c2d2h1 c2egi2 U4
DIF c1eai1 c1d1h1 1
DIF c1eai1 c1ebi1 1
DIF c1eai1 c1e2i1 1
DIF c1eai1 c2egi1 1
DIF c1e2i2 c1e2i1 U3
DIF c1e2i2 c1egi2 U3+U2
DIF c2e2i1 c1e2i1 U1
DIF c2e2i1 c2egi1 U3+U2
DIF c1ebi2 c1ebi1 U3
DIF c1ebi2 c1egi2 U4+U3+U2+U1
DIF c2ebi1 c1ebi1 U1
DIF c2ebi1 c2egi1 U4+U3+U2+U1
DIF c1d1h2 c1d1h1 U3
DIF c1d1h2 c1egi2 U4
DIF c1d2h1 c1d1h1 U2
DIF c1d2h1 c1e2i1 U4
DIF c1d2h1 c1egi2 U4
DIF c2d1h1 c1d1h1 U1
DIF c2d1h1 c2egi1 U4
DIF c2egi2 c1egi2 U1
DIF c2egi2 c2egi1 U3
DIF c1e2i1 c1egi1 U3+U2
DIF c1ebi1 c1egi1 U4+U3+U2+U1
DIF c2egi1 c1egi1 U1
DIF c1egi2 c1egi1 U3
DIF c1d1h1 c1egi1 U4
)FIX";

inline constexpr std::string_view z2_cancelled = R"FIX(GEN c2d2h2 0 0
GEN c1d2h2 1 -2
GEN c2d2h1 1 -2
GEN c2d1h2 1 -2
GEN c2ebi2 1 -2
GEN c1d2h1 2 -4
GEN c2d1h1 2 -4
GEN c1d1h2 2 -4
GEN c1ebi2 2 -4
GEN c2ebi1 2 -4
GEN c2egi2 2 -4
GEN c1d1h1 3 -6
GEN c1ebi1 3 -6
GEN c2egi1 3 -6
GEN c1egi2 3 -6
GEN c1egi1 4 -8
DIF c2d2h2 c1d2h2 U1
DIF c2d2h2 c2d2h1 U3
DIF c2d2h2 c2d1h2 U4+U2
DIF c2d2h2 c2ebi2 U4
DIF c1d2h2 c1d2h1 U3
DIF c1d2h2 c1d1h2 U4+U2
DIF c1d2h2 c1ebi2 U4
DIF c1d2h2 c2egi2 U4
DIF c2d2h1 c1d2h1 U1
DIF c2d2h1 c2d1h1 U4+U2
DIF c2d2h1 c2ebi1 U4
DIF c2d2h1 c2egi2 U4
DIF c2d1h2 c1d1h2 U1
DIF c2d1h2 c2d1h1 U3
DIF c2d1h2 c2egi2 U4
DIF c2ebi2 c1ebi2 U1
DIF c2ebi2 c2ebi1 U3
DIF c2ebi2 c2egi2 U4+U3+U2+U1
DIF c1d2h1 c1d1h1 U4+U2
DIF c1d2h1 c1ebi1 U4
DIF c1d2h1 c2egi1 U4
DIF c1d2h1 c1egi2 U4
DIF c2d1h1 c1d1h1 U1
DIF c2d1h1 c2egi1 U4
DIF c1d1h2 c1d1h1 U3
DIF c1d1h2 c1egi2 U4
DIF c1ebi2 c1ebi1 U3
DIF c1ebi2 c1egi2 U4+U3+U2+U1
DIF c2ebi1 c1ebi1 U1
DIF c2ebi1 c2egi1 U4+U3+U2+U1
DIF c2egi2 c1egi2 U1
DIF c2egi2 c2egi1 U3
DIF c1d1h1 c1egi1 U4
DIF c1ebi1 c1egi1 U4+U3+U2+U1
DIF c2egi1 c1egi1 U1
DIF c1egi2 c1egi1 U3
)FIX";

inline constexpr std::string_view z3 = R"FIX(GEN baei22 0 0
GEN baei12 1 -2
GEN baei21 1 -2
GEN gaei22 1 -2
GEN baei11 2 -4
GEN gaei12 2 -4
GEN gaei21 2 -4
GEN gaei11 3 -6
DIF baei22 baei12 U2
DIF baei22 baei21 U3
DIF baei22 gaei22 U4+U3+U2+U1
DIF baei12 baei11 U3
DIF baei12 gaei12 U4+U3+U2+U1
DIF baei21 baei11 U2
DIF baei21 gaei21 U4+U3+U2+U1
DIF gaei22 gaei12 U2
DIF gaei22 gaei21 U3
DIF baei11 gaei11 U4+U3+U2+U1
DIF gaei12 gaei11 U3
DIF gaei21 gaei11 U2
)FIX";

inline constexpr std::string_view z4 = R"FIX(GEN bcej22 0 0
GEN bcej12 1 -2
GEN bcej21 1 -2
GEN gcej22 1 -2
GEN bcej11 2 -4
GEN gcej12 2 -4
GEN gcej21 2 -4
GEN gcej11 3 -6
DIF bcej22 bcej12 U1
DIF bcej22 bcej21 U4
DIF bcej22 gcej22 U4+U3+U2+U1
DIF bcej12 bcej11 U4
DIF bcej12 gcej12 U4+U3+U2+U1
DIF bcej21 bcej11 U1
DIF bcej21 gcej21 U4+U3+U2+U1
DIF gcej22 gcej12 U1
DIF gcej22 gcej21 U4
DIF bcej11 gcej11 U4+U3+U2+U1
DIF gcej12 gcej11 U4
DIF gcej21 gcej11 U1
)FIX";

inline constexpr std::string_view z5 = R"FIX(GEN y1234 0 0
GEN y123 1 -2
GEN y124 1 -2
GEN y134 1 -2
GEN y234 1 -2
GEN y12 2 -4
GEN y13 2 -4
GEN y14 2 -4
GEN y23 2 -4
GEN y24 2 -4
GEN y34 2 -4
GEN y1 3 -6
GEN y2 3 -6
GEN y3 3 -6
GEN y4 3 -6
GEN y 4 -8
DIF y1234 y234 U1
DIF y1234 y134 U2
DIF y1234 y124 U3
DIF y1234 y123 U4
DIF y123 y23 U1
DIF y123 y13 U2
DIF y123 y12 U3
DIF y124 y24 U1
DIF y124 y14 U2
DIF y124 y12 U4
DIF y134 y34 U1
DIF y134 y14 U3
DIF y134 y13 U4
DIF y234 y34 U2
DIF y234 y24 U3
DIF y234 y23 U4
DIF y12 y2 U1
DIF y12 y1 U2
DIF y13 y3 U1
DIF y13 y1 U3
DIF y14 y4 U1
DIF y14 y1 U4
DIF y23 y3 U2
DIF y23 y2 U3
DIF y24 y4 U2
DIF y24 y2 U4
DIF y34 y4 U3
DIF y34 y3 U4
DIF y1 y U1
DIF y2 y U2
DIF y3 y U3
DIF y4 y U4
)FIX";

inline constexpr std::array<std::pair<std::string_view, std::string_view>,
                            9>
    kAll{{
        {"z0_total", z0_total},
        {"z0_cancelled", z0_cancelled},
        {"z1_total", z1_total},
        {"z1_cancelled", z1_cancelled},
        {"z2_total", z2_total},
        {"z2_cancelled", z2_cancelled},
        {"z3", z3},
        {"z4", z4},
        {"z5", z5},
    }};

}  // namespace homfly::fixtures_data
