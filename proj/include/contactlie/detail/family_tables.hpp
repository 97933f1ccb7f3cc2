#pragma once

// Table builders shared between the catalog (corrected tables) and the
// errata registry (printed tables). Internal to the library.

#include "contactlie/families.hpp"

namespace contactlie::tables {

// dim 5
FamilyBuild dim5_A();
FamilyBuild dim5_B();
FamilyBuild dim5_C();
FamilyBuild dim5_D();
FamilyBuild dim5_E();
FamilyBuild dim5_F();
FamilyBuild dim5_G();
FamilyBuild dim5_H(bool printed = false);
FamilyBuild dim5_I(bool printed = false);
FamilyBuild dim5_J();
FamilyBuild dim5_K(bool printed = false);
FamilyBuild dim5_L();
FamilyBuild dim5_remark_a2_1(bool printed = false);
FamilyBuild dim5_remark_a2_0(bool printed = false);

// dim 3
FamilyBuild dim3_heisenberg();
FamilyBuild dim3_simple();
FamilyBuild dim3_nilpotent_f();

// generic series
FamilyBuild maxrank(int p);
FamilyBuild rank_p2_C(int p, bool printed = false);
FamilyBuild rank_p2_D(int p, bool printed = false);
FamilyBuild dim9_frobcore_C(bool printed = false);
FamilyBuild dim9_frobcore_D();
FamilyBuild dim11_rank2_a(bool printed = false);
FamilyBuild dim11_rank2_b(bool printed = false);
FamilyBuild dim13_rank3_a(bool printed = false);
FamilyBuild dim13_rank3_b(bool printed = false);

// worked examples
FamilyBuild example_so3_r2();
FamilyBuild example_frobenius_ext5(bool printed = false);

}  // namespace contactlie::tables
