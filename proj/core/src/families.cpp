#include "thuecert/families.hpp"

#include <cassert>
#include <stdexcept>

namespace thuecert {

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::SimplestMN: return "simplest";
        case FamilyId::TogbeWashington: return "togbe_washington";
        case FamilyId::Kishi: return "kishi";
        case FamilyId::Balady: return "balady";
    }
    return "?";
}

FamilyInstance simplest_form(const Int& m, const Int& n) {
    if (m == 0) throw std::invalid_argument("simplest_form: m must be nonzero");
    return {FamilyId::SimplestMN, {m, n}, {m, -n, -(n + 3 * m), -m}};
}

FamilyInstance togbe_washington_form(const Int& n) {
    return {FamilyId::TogbeWashington, {n},
            {1, -(n * n * n - 2 * n * n + 3 * n - 3), -n * n, -1}};
}

FamilyInstance kishi_form(const Int& n) {
    return {FamilyId::Kishi, {n},
            {1, -n * (n * n + n + 3) * (n * n + 2),
             -(n * n * n + 2 * n * n + 3 * n + 3), -1}};
}

FamilyInstance balady_form(const Int& n) {
    const Int n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    const Int b = n4 * n3 + 2 * n3 * n3 + 3 * n4 * n - n4 - 3 * n3 - 3 * n2 + 3 * n + 3;
    return {FamilyId::Balady, {n}, {1, b, -n4 + 3 * n, -1}};
}

Int simplest_disc_identity(const Int& m, const Int& n) {
    const Int root = n * n + 3 * m * n + 9 * m * m;
    const Int value = root * root;
    // checked identity, not an axiom: the paper states only the m = 1 case
    assert(m == 0 || value == discriminant(simplest_form(m, n).form));
    return value;
}

}  // namespace thuecert
