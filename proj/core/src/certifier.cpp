#include "thuecert/certifier.hpp"

#include <stdexcept>

#include "thuecert/field2adic.hpp"

namespace thuecert {

const char* to_string(Verdict v) {
    return v == Verdict::NoSolutions ? "NoSolutions" : "NotApplicable";
}

const char* to_string(Statement s) {
    switch (s) {
        case Statement::Thue: return "thue";
        case Statement::Homogeneous: return "homogeneous";
        case Statement::Mordell: return "mordell";
    }
    return "?";
}

HypothesisReport check_hypotheses(const BinaryCubicForm& f, const Int& k) {
    require_cubic_in_x(f);
    HypothesisReport rep;
    rep.a_odd = is_odd(f.a);
    rep.bc_plus_d_odd = is_odd(f.b * f.c + f.d);
    rep.irreducible = is_irreducible(f);
    rep.disc_value = discriminant(f);
    rep.disc_square = is_perfect_square(rep.disc_value);
    if (k != 0) {
        rep.v2_k = v2(k);
        rep.v2_not_multiple_of_3 = (*rep.v2_k % 3 != 0);  // v2 = 0 counts as divisible
    }
    return rep;
}

namespace {

void collect_failures(const HypothesisReport& rep, std::vector<std::string>& reasons) {
    if (!rep.a_odd) reasons.push_back("a is even");
    if (!rep.bc_plus_d_odd) reasons.push_back("bc+d is even");
    if (!rep.irreducible) reasons.push_back("aX^3+bX^2+cX+d is reducible over Q");
    if (!rep.disc_square) reasons.push_back("discriminant is not a perfect square");
    if (rep.v2_not_multiple_of_3 && !*rep.v2_not_multiple_of_3) {
        reasons.push_back("3 divides v2(k)");
    }
}

void warn_even_square_disc(const HypothesisReport& rep, std::vector<std::string>& warnings) {
    if (rep.disc_square && rep.disc_value != 0 && is_even(rep.disc_value)) {
        warnings.push_back(
            "discriminant is an even perfect square; outside the verified territory, "
            "cross-check verdicts against the brute-force oracle");
    }
}

}  // namespace

Certificate certify_thue(const BinaryCubicForm& f, const Int& k) {
    require_cubic_in_x(f);
    if (k == 0) {
        throw std::invalid_argument(
            "certify_thue: k = 0 is outside the theorem; an irreducible form "
            "vanishes only at (0,0)");
    }
    Certificate cert;
    cert.statement = Statement::Thue;
    cert.input_form = f;
    cert.input_k = k;
    cert.report = check_hypotheses(f, k);
    if (cert.report.all_theorem1()) {
        cert.verdict = Verdict::NoSolutions;
        cert.reasons.push_back(
            "hypotheses hold: a odd, bc+d odd, irreducible, square discriminant, "
            "3 does not divide v2(k)");
    } else {
        cert.verdict = Verdict::NotApplicable;
        collect_failures(cert.report, cert.reasons);
    }
    warn_even_square_disc(cert.report, cert.warnings);
    return cert;
}

Certificate certify_homogeneous(const BinaryCubicForm& f, const Int& k) {
    Certificate cert = certify_thue(f, k);
    cert.statement = Statement::Homogeneous;
    if (cert.verdict == Verdict::NoSolutions) {
        cert.reasons.push_back(
            "z != 0 gives v2(k z^3) = v2(k) (mod 3); z = 0 forces f(x,y) = 0, "
            "impossible for an irreducible form away from (0,0)");
    }
    return cert;
}

Certificate certify_mordell(const Int& a, const Int& b, const Int& c,
                            const Int& d, const Int& t) {
    if (a == 0) throw std::invalid_argument("certify_mordell: a must be nonzero");
    if (t == 0) throw std::invalid_argument("certify_mordell: t must be nonzero");

    Certificate cert;
    cert.statement = Statement::Mordell;
    cert.input_form = {a, b, c, d};
    cert.input_k = t;

    const BinaryCubicForm shifted{a, b, c, d + t};
    HypothesisReport rep;
    rep.a_odd = is_odd(a);
    rep.bc_plus_d_odd = is_odd(b * c + d);  // parity condition as printed, on d
    rep.irreducible = is_irreducible(shifted);
    rep.disc_value = discriminant(shifted);
    rep.disc_square = is_perfect_square(rep.disc_value);
    rep.v2_t = v2(t);
    rep.v2_t_equals_1 = (*rep.v2_t == 1);
    cert.report = rep;

    const bool ok = rep.a_odd && rep.bc_plus_d_odd && rep.irreducible &&
                    rep.disc_square && *rep.v2_t_equals_1;
    if (ok) {
        cert.verdict = Verdict::NoSolutions;
        cert.reasons.push_back(
            "hypotheses hold: v2(t) = 1, a odd, bc+d odd, and "
            "aX^3+bX^2+cX+(d+t) irreducible with square discriminant");
    } else {
        cert.verdict = Verdict::NotApplicable;
        if (!rep.a_odd) cert.reasons.push_back("a is even");
        if (!rep.bc_plus_d_odd) cert.reasons.push_back("bc+d is even");
        if (!rep.irreducible) cert.reasons.push_back("aX^3+bX^2+cX+(d+t) is reducible over Q");
        if (!rep.disc_square) {
            cert.reasons.push_back("discriminant of aX^3+bX^2+cX+(d+t) is not a perfect square");
        }
        if (!*rep.v2_t_equals_1) cert.reasons.push_back("v2(t) != 1");
    }
    cert.warnings.push_back(
        "parity hypothesis evaluated on bc+d as printed; under v2(t) = 1, t is "
        "even, so bc+(d+t) has the same parity");
    warn_even_square_disc(rep, cert.warnings);
    return cert;
}

}  // namespace thuecert
