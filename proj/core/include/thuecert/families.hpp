#pragma once

#include <vector>

#include "thuecert/forms.hpp"

namespace thuecert {

enum class FamilyId { SimplestMN, TogbeWashington, Kishi, Balady };

const char* family_name(FamilyId id);

struct FamilyInstance {
    FamilyId family_id;
    std::vector<Int> parameters;  // (m, n) for SimplestMN, (n) otherwise
    BinaryCubicForm form;
};

// f_{m,n}(x,y) = m x^3 - n x^2 y - (n+3m) x y^2 - m y^3. Throws on m = 0.
FamilyInstance simplest_form(const Int& m, const Int& n);

// x^3 - (n^3-2n^2+3n-3) x^2 y - n^2 x y^2 - y^3
FamilyInstance togbe_washington_form(const Int& n);

// x^3 - n(n^2+n+3)(n^2+2) x^2 y - (n^3+2n^2+3n+3) x y^2 - y^3
FamilyInstance kishi_form(const Int& n);

// x^3 + (n^7+2n^6+3n^5-n^4-3n^3-3n^2+3n+3) x^2 y + (-n^4+3n) x y^2 - y^3
FamilyInstance balady_form(const Int& n);

// (n^2 + 3mn + 9m^2)^2, the discriminant of f_{m,n}. Checked against the
// forms-module discriminant in debug builds; callers assert equality in tests.
Int simplest_disc_identity(const Int& m, const Int& n);

}  // namespace thuecert
