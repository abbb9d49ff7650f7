#include "altext/multiext.hpp"

#include <stdexcept>

#include "altext/detail/table_system.hpp"

namespace altext {

namespace {

struct Scan {
    CheckReport& report;

    void condition(const std::string& name) { report.conditions.push_back(name); }

    void expect_zero(const std::string& name, const std::vector<GroupElem>& args, const GroupElem& residual) {
        if (residual.is_zero() || report.failed(name)) return;
        report.issues.push_back(CheckIssue{name, "", args, residual});
    }
};

void require_arity(const Cochain& c, int arity, const char* what) {
    if (c.arity() != arity)
        throw std::invalid_argument(std::string(what) + " must have arity " + std::to_string(arity));
}

// Biextension pair in the (x, y) slots for fixed z.
BiextPair restrict_12(const TriextData& t, const GroupElem& z) {
    return BiextPair{fix_slots(t.g1, {{3, z}}), fix_slots(t.g2, {{3, z}})};
}

// Biextension pair in the (y, z) slots for fixed x.
BiextPair restrict_23(const TriextData& t, const GroupElem& x) {
    return BiextPair{fix_slots(t.g2, {{0, x}}), fix_slots(t.g3, {{0, x}})};
}

// lambda of the fixed-z pair, as a cochain in (x, y, z).
Cochain lambda_12(const TriextData& t) {
    const FinAbGroup& B = t.base();
    Cochain out(B, t.coeff(), 3);
    for (const auto& z : B.enumerate()) {
        const Cochain slice = lambda_of(restrict_12(t, z));
        for (const auto& x : B.enumerate())
            for (const auto& y : B.enumerate()) out.set_value({x, y, z}, slice(x, y));
    }
    return out;
}

// lambda of the fixed-x pair, as a cochain in (x, y, z).
Cochain lambda_23(const TriextData& t) {
    const FinAbGroup& B = t.base();
    Cochain out(B, t.coeff(), 3);
    for (const auto& x : B.enumerate()) {
        const Cochain slice = lambda_of(restrict_23(t, x));
        for (const auto& y : B.enumerate())
            for (const auto& z : B.enumerate()) out.set_value({x, y, z}, slice(y, z));
    }
    return out;
}

// lambda of the fixed-y pair in the (x, z) slots, as a cochain in (x, y, z).
Cochain lambda_13(const TriextData& t) {
    const FinAbGroup& B = t.base();
    Cochain out(B, t.coeff(), 3);
    for (const auto& y : B.enumerate()) {
        const BiextPair pair{fix_slots(t.g1, {{2, y}}), fix_slots(t.g3, {{1, y}})};
        const Cochain slice = lambda_of(pair);
        for (const auto& x : B.enumerate())
            for (const auto& z : B.enumerate()) out.set_value({x, y, z}, slice(x, z));
    }
    return out;
}

// Anti-symmetry section induced by u1: s1(x,y,z) = u1(x+y,z) - u1(x,z)
// - u1(y,z) - lambda12(x,y|z); the lambda term realizes the canonical
// isomorphism back to the (x,y,z) + (y,x,z) fibre.
Cochain s1_of(const AltTriextData& a, const Cochain& lam12) {
    const FinAbGroup& B = a.base.base();
    const FinAbGroup& A = a.base.coeff();
    Cochain out(B, A, 3);
    for (const auto& x : B.enumerate())
        for (const auto& y : B.enumerate())
            for (const auto& z : B.enumerate()) {
                GroupElem v = A.sub(a.u1(B.add(x, y), z),
                                    A.add(a.u1(x, z), A.add(a.u1(y, z), lam12(x, y, z))));
                out.set_value({x, y, z}, v);
            }
    return out;
}

// s2(x,y,z) = u2(x,y+z) - u2(x,y) - u2(x,z) - lambda23(x|y,z).
Cochain s2_of(const AltTriextData& a, const Cochain& lam23) {
    const FinAbGroup& B = a.base.base();
    const FinAbGroup& A = a.base.coeff();
    Cochain out(B, A, 3);
    for (const auto& x : B.enumerate())
        for (const auto& y : B.enumerate())
            for (const auto& z : B.enumerate()) {
                GroupElem v = A.sub(a.u2(x, B.add(y, z)),
                                    A.add(a.u2(x, y), A.add(a.u2(x, z), lam23(x, y, z))));
                out.set_value({x, y, z}, v);
            }
    return out;
}

}  // namespace

FourCocycleData::FourCocycleData(Cochain f) : f_(std::move(f)) {
    require_arity(f_, 4, "f");
    CheckReport r = is_cocycle(f_);
    if (!r.ok()) throw std::invalid_argument("not a 4-cocycle: " + r.summary());
}

TriextData make_triext(Cochain g1, Cochain g2, Cochain g3) {
    require_arity(g1, 4, "g1");
    require_arity(g2, 4, "g2");
    require_arity(g3, 4, "g3");
    if (!g1.same_shape(g2) || !g1.same_shape(g3))
        throw std::invalid_argument("triextension cochains must share base and coefficient groups");
    return TriextData{std::move(g1), std::move(g2), std::move(g3)};
}

Cochain quadralinear_map(const FourCocycleData& c) {
    const FinAbGroup& B = c.base();
    const FinAbGroup& A = c.coeff();
    const auto el = B.enumerate();
    const Cochain& f = c.f();

    // All 24 arrangements with their signs.
    std::vector<std::pair<std::array<int, 4>, int>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        perms.emplace_back(p, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));

    Cochain out(B, A, 4);
    std::vector<GroupElem> args(4);
    for (std::int64_t flat = 0; flat < out.tuple_count(); ++flat) {
        std::int64_t rem = flat;
        std::array<std::int64_t, 4> idx{};
        for (int i = 4; i-- > 0;) {
            idx[i] = rem % B.order();
            rem /= B.order();
        }
        GroupElem acc = A.zero();
        for (const auto& [arr, eps] : perms) {
            for (int i = 0; i < 4; ++i) args[i] = el[idx[arr[i]]];
            GroupElem v = f.value_at(std::span<const GroupElem>(args.data(), 4));
            acc = eps > 0 ? A.add(acc, v) : A.sub(acc, v);
        }
        out.set_value_flat(flat, acc);
    }

    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) {
                if (!(out(x, x, y, z).is_zero() && out(x, y, x, z).is_zero() && out(x, y, z, x).is_zero() &&
                      out(y, x, x, z).is_zero() && out(y, x, z, x).is_zero() && out(y, z, x, x).is_zero()))
                    throw std::logic_error("quadralinear map fails to be alternating");
                for (const auto& w : el) {
                    GroupElem lin =
                        A.sub(out(B.add(x, w), y, z, z), A.add(out(x, y, z, z), out(w, y, z, z)));
                    if (!lin.is_zero()) throw std::logic_error("quadralinear map fails to be linear");
                }
            }
    return out;
}

DerivedFamilies derive_22ext_families(const FourCocycleData& c) {
    DerivedFamilies out{
        partial_shuffle_sym(c.f(), 0, 3, 1, -1),  // last slot shuffled through the first three
        partial_shuffle_sym(c.f(), 0, 1, 3, +1),  // first slot shuffled through the last three
        partial_shuffle_sym(c.f(), 0, 2, 2, -1),  // (x1,x2) shuffled through (x3,x4)
    };
    return out;
}

TriextData derive_triext(const FourCocycleData& c) {
    Cochain ell = quadralinear_map(c);
    if (!ell.is_zero())
        throw ObstructionError("partial laws are not commutative: nonzero quadralinear obstruction",
                               std::move(ell));

    const DerivedFamilies fam = derive_22ext_families(c);
    Cochain g1 = partial_shuffle_sym(fam.psi, 0, 2, 1, +1);
    Cochain g2 = partial_shuffle_sym(fam.psi, 0, 1, 2, -1);
    Cochain gamma = partial_shuffle_sym(fam.phi, 1, 2, 1, +1);
    Cochain g3 = partial_shuffle_sym(fam.phi, 1, 1, 2, -1);
    if (!(gamma == g2))
        throw std::logic_error("derived second-law cochains disagree between the two routes");
    return TriextData{std::move(g1), std::move(g2), std::move(g3)};
}

CheckReport check_triext(const TriextData& t) {
    require_arity(t.g1, 4, "g1");
    require_arity(t.g2, 4, "g2");
    require_arity(t.g3, 4, "g3");
    if (!t.g1.same_shape(t.g2) || !t.g1.same_shape(t.g3))
        throw std::invalid_argument("triextension cochains must share base and coefficient groups");

    const FinAbGroup& B = t.base();
    const FinAbGroup& A = t.coeff();
    const auto el = B.enumerate();

    CheckReport report;
    Scan scan{report};
    for (const char* name : {"tricocyc.1", "tricocyc.2", "tricocyc.3", "trisym.1", "trisym.2", "trisym.3",
                             "tricompat.12", "tricompat.13", "tricompat.23"})
        scan.condition(name);

    for (const auto& a : el)
        for (const auto& b : el)
            for (const auto& c : el)
                for (const auto& d : el) {
                    for (const auto& e : el) {
                        // 2-cocycle in the paired slots of each law
                        GroupElem r = A.sub(A.add(t.g1(b, c, d, e), t.g1(a, B.add(b, c), d, e)),
                                            A.add(t.g1(B.add(a, b), c, d, e), t.g1(a, b, d, e)));
                        scan.expect_zero("tricocyc.1", {a, b, c, d, e}, r);
                        r = A.sub(A.add(t.g2(d, b, c, e), t.g2(d, a, B.add(b, c), e)),
                                  A.add(t.g2(d, B.add(a, b), c, e), t.g2(d, a, b, e)));
                        scan.expect_zero("tricocyc.2", {d, a, b, c, e}, r);
                        r = A.sub(A.add(t.g3(d, e, b, c), t.g3(d, e, a, B.add(b, c))),
                                  A.add(t.g3(d, e, B.add(a, b), c), t.g3(d, e, a, b)));
                        scan.expect_zero("tricocyc.3", {d, e, a, b, c}, r);

                        // compatibility of each law pair, remaining slot fixed
                        GroupElem lhs = A.sub(t.g2(B.add(a, b), c, d, e), A.add(t.g2(a, c, d, e), t.g2(b, c, d, e)));
                        GroupElem rhs = A.sub(t.g1(a, b, B.add(c, d), e), A.add(t.g1(a, b, c, e), t.g1(a, b, d, e)));
                        scan.expect_zero("tricompat.12", {a, b, c, d, e}, A.sub(lhs, rhs));

                        lhs = A.sub(t.g3(B.add(a, b), e, c, d), A.add(t.g3(a, e, c, d), t.g3(b, e, c, d)));
                        rhs = A.sub(t.g1(a, b, e, B.add(c, d)), A.add(t.g1(a, b, e, c), t.g1(a, b, e, d)));
                        scan.expect_zero("tricompat.13", {a, b, e, c, d}, A.sub(lhs, rhs));

                        lhs = A.sub(t.g3(e, B.add(a, b), c, d), A.add(t.g3(e, a, c, d), t.g3(e, b, c, d)));
                        rhs = A.sub(t.g2(e, a, b, B.add(c, d)), A.add(t.g2(e, a, b, c), t.g2(e, a, b, d)));
                        scan.expect_zero("tricompat.23", {e, a, b, c, d}, A.sub(lhs, rhs));
                    }
                    scan.expect_zero("trisym.1", {a, b, c, d}, A.sub(t.g1(a, b, c, d), t.g1(b, a, c, d)));
                    scan.expect_zero("trisym.2", {c, a, b, d}, A.sub(t.g2(c, a, b, d), t.g2(c, b, a, d)));
                    scan.expect_zero("trisym.3", {c, d, a, b}, A.sub(t.g3(c, d, a, b), t.g3(c, d, b, a)));
                }

    return report;
}

CheckReport check_alt_triext(const AltTriextData& a) {
    require_arity(a.u1, 2, "u1");
    require_arity(a.u2, 2, "u2");
    CheckReport base = check_triext(a.base);
    if (!base.ok()) throw std::invalid_argument("invalid base triextension: " + base.summary());

    const FinAbGroup& B = a.base.base();
    const FinAbGroup& A = a.base.coeff();
    const auto el = B.enumerate();

    CheckReport report;
    Scan scan{report};

    // (i) and (ii): sliced alternating-triple conditions.
    for (const auto& z : el) {
        CheckReport sub = check_alt_triple(restrict_12(a.base, z), fix_slots(a.u1, {{1, z}}));
        report.merge(sub, "u1 slice z=" + z.to_string());
    }
    for (const auto& x : el) {
        CheckReport sub = check_alt_triple(restrict_23(a.base, x), fix_slots(a.u2, {{0, x}}));
        report.merge(sub, "u2 slice x=" + x.to_string());
    }

    for (const char* name : {"compx.u2", "compx.u1", "tri1", "t4", "s1t1", "s2t2"}) scan.condition(name);

    const Cochain lam12 = lambda_12(a.base);
    const Cochain lam23 = lambda_23(a.base);
    const Cochain s1 = s1_of(a, lam12);
    const Cochain s2 = s2_of(a, lam23);

    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) {
                // linearity of u2 in x through the first law, of u1 in z through the third
                GroupElem r = A.sub(a.u2(B.add(x, y), z), A.add(a.u2(x, z), A.add(a.u2(y, z), a.base.g1(x, y, z, z))));
                scan.expect_zero("compx.u2", {x, y, z}, r);
                r = A.sub(a.u1(x, B.add(y, z)), A.add(a.u1(x, y), A.add(a.u1(x, z), a.base.g3(x, x, y, z))));
                scan.expect_zero("compx.u1", {x, y, z}, r);

                scan.expect_zero("s1t1", {x, z}, A.sub(s1(x, x, z), A.add(a.u1(x, z), a.u1(x, z))));
                scan.expect_zero("s2t2", {x, y}, A.sub(s2(x, y, y), A.add(a.u2(x, y), a.u2(x, y))));
            }

    for (const auto& x : el) {
        scan.expect_zero("tri1", {x}, A.sub(a.u1(x, x), a.u2(x, x)));
        for (const auto& y : el) {
            GroupElem lhs = A.sub(a.u1(y, x), a.u2(x, y));
            GroupElem rhs = A.sub(s2(y, x, y), s1(y, x, y));
            scan.expect_zero("t4", {x, y}, A.sub(lhs, rhs));
        }
    }

    return report;
}

T3Result derive_t3(const AltTriextData& a) {
    CheckReport pre = check_alt_triext(a);
    if (!pre.ok()) throw std::invalid_argument("not an alternating triextension: " + pre.summary());

    const FinAbGroup& B = a.base.base();
    const FinAbGroup& A = a.base.coeff();
    const auto el = B.enumerate();
    const Cochain lam12 = lambda_12(a.base);
    const Cochain lam23 = lambda_23(a.base);
    const Cochain lam13 = lambda_13(a.base);
    const Cochain s1 = s1_of(a, lam12);
    const Cochain s2 = s2_of(a, lam23);

    T3Result out{Cochain(B, A, 2), CheckReport{}};
    Scan scan{out.report};
    for (const char* name : {"t33", "s123", "t123.1", "t123.2"}) scan.condition(name);

    for (const auto& x : el)
        for (const auto& y : el) {
            GroupElem primary = A.sub(s1(x, y, x), a.u2(y, x));    // first construction route
            GroupElem alternate = A.sub(s2(x, y, x), a.u1(x, y));  // second construction route
            out.t3.set_value({x, y}, primary);
            scan.expect_zero("t33", {x, y}, A.sub(primary, alternate));
        }

    Cochain s3(B, A, 3);
    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) {
                GroupElem v = A.sub(out.t3(B.add(x, z), y),
                                    A.add(out.t3(x, y), A.add(out.t3(z, y), lam13(x, y, z))));
                s3.set_value({x, y, z}, v);
                GroupElem rhs = A.sub(A.add(s1(x, y, z), s1(z, y, x)), s2(y, x, z));
                scan.expect_zero("s123", {x, y, z}, A.sub(v, rhs));
            }

    for (const auto& x : el)
        for (const auto& z : el) {
            scan.expect_zero("t123.1", {x, z}, A.sub(a.u1(x, z), A.sub(s3(x, x, z), a.u2(z, x))));
            scan.expect_zero("t123.2", {x, z}, A.sub(a.u2(x, z), A.sub(s3(x, z, z), a.u1(z, x))));
        }

    return out;
}

std::optional<Cochain> solve_theta(const TriextData& t) {
    CheckReport pre = check_triext(t);
    if (!pre.ok()) throw std::invalid_argument("not a triextension: " + pre.summary());

    const FinAbGroup& B = t.base();
    const FinAbGroup& A = t.coeff();
    const auto el = B.enumerate();
    detail::TableSystem sys(B, A, 3);

    for (const auto& a : el) {
        if (a.is_zero()) continue;
        for (const auto& b : el) {
            if (b.is_zero()) continue;
            for (const auto& c : el) {
                if (c.is_zero()) continue;
                for (const auto& d : el) {
                    if (d.is_zero()) continue;
                    sys.term({B.add(a, b), c, d}, 1);
                    sys.term({a, c, d}, -1);
                    sys.term({b, c, d}, -1);
                    sys.finish_row(t.g1(a, b, c, d));

                    sys.term({a, B.add(b, c), d}, 1);
                    sys.term({a, b, d}, -1);
                    sys.term({a, c, d}, -1);
                    sys.finish_row(t.g2(a, b, c, d));

                    sys.term({a, b, B.add(c, d)}, 1);
                    sys.term({a, b, c}, -1);
                    sys.term({a, b, d}, -1);
                    sys.finish_row(t.g3(a, b, c, d));
                }
            }
        }
    }
    for (const auto& x : el) {
        if (x.is_zero()) continue;
        for (const auto& z : el) {
            if (z.is_zero()) continue;
            sys.term({x, x, z}, 1);
            sys.finish_row(A.zero());
            sys.term({x, z, z}, 1);
            sys.finish_row(A.zero());
        }
    }
    return sys.solve();
}

CheckReport check_theta(const TriextData& t, const Cochain& theta) {
    require_arity(theta, 3, "theta");
    const FinAbGroup& B = t.base();
    const FinAbGroup& A = t.coeff();
    const auto el = B.enumerate();

    CheckReport report;
    Scan scan{report};
    for (const char* name : {"theta.law1", "theta.law2", "theta.law3", "theta.diag12", "theta.diag23"})
        scan.condition(name);

    for (const auto& a : el)
        for (const auto& b : el)
            for (const auto& c : el)
                for (const auto& d : el) {
                    GroupElem r = A.sub(theta(B.add(a, b), c, d), A.add(theta(a, c, d), theta(b, c, d)));
                    scan.expect_zero("theta.law1", {a, b, c, d}, A.sub(r, t.g1(a, b, c, d)));
                    r = A.sub(theta(a, B.add(b, c), d), A.add(theta(a, b, d), theta(a, c, d)));
                    scan.expect_zero("theta.law2", {a, b, c, d}, A.sub(r, t.g2(a, b, c, d)));
                    r = A.sub(theta(a, b, B.add(c, d)), A.add(theta(a, b, c), theta(a, b, d)));
                    scan.expect_zero("theta.law3", {a, b, c, d}, A.sub(r, t.g3(a, b, c, d)));
                }
    for (const auto& x : el)
        for (const auto& z : el) {
            scan.expect_zero("theta.diag12", {x, x, z}, theta(x, x, z));
            scan.expect_zero("theta.diag23", {x, z, z}, theta(x, z, z));
        }
    return report;
}

CheckReport check_picard_family(const FourCocycleData& c, const Cochain& theta) {
    require_arity(theta, 3, "theta");
    const TriextData t = derive_triext(c);
    CheckReport sub = check_theta(t, theta);
    if (!sub.ok()) throw std::invalid_argument("theta is not a trivialization: " + sub.summary());

    const DerivedFamilies fam = derive_22ext_families(c);
    const FinAbGroup& B = c.base();
    const FinAbGroup& A = c.coeff();
    const auto el = B.enumerate();

    CheckReport report;
    Scan scan{report};
    for (const char* name : {"first.braid1", "first.braid2", "first.sym", "first.ps", "second.braid1",
                             "second.braid2", "second.sym", "second.ps"})
        scan.condition(name);

    auto braid1 = [&](const Cochain& f3, const Cochain& g2, const GroupElem& x, const GroupElem& y,
                      const GroupElem& z) {
        GroupElem lhs = A.add(A.sub(f3(x, y, z), f3(x, z, y)), f3(z, x, y));
        GroupElem rhs = A.sub(g2(B.add(x, y), z), A.add(g2(x, z), g2(y, z)));
        return A.sub(lhs, rhs);
    };
    auto braid2 = [&](const Cochain& f3, const Cochain& g2, const GroupElem& x, const GroupElem& y,
                      const GroupElem& z) {
        GroupElem lhs = A.sub(f3(y, x, z), A.add(f3(x, y, z), f3(y, z, x)));
        GroupElem rhs = A.sub(g2(x, B.add(y, z)), A.add(g2(x, y), g2(x, z)));
        return A.sub(lhs, rhs);
    };

    for (const auto& w : el) {
        const Cochain f3 = fix_slots(fam.psi, {{3, w}});
        const Cochain g2 = fix_slots(theta, {{2, w}});
        const std::string ctx = "w=" + w.to_string();
        for (const auto& x : el)
            for (const auto& y : el) {
                for (const auto& z : el) {
                    if (!report.failed("first.braid1") && !braid1(f3, g2, x, y, z).is_zero())
                        report.issues.push_back(CheckIssue{"first.braid1", ctx, {x, y, z}, braid1(f3, g2, x, y, z)});
                    if (!report.failed("first.braid2") && !braid2(f3, g2, x, y, z).is_zero())
                        report.issues.push_back(CheckIssue{"first.braid2", ctx, {x, y, z}, braid2(f3, g2, x, y, z)});
                }
                if (!report.failed("first.sym") && !A.sub(g2(x, y), g2(y, x)).is_zero())
                    report.issues.push_back(CheckIssue{"first.sym", ctx, {x, y}, A.sub(g2(x, y), g2(y, x))});
            }
        for (const auto& x : el)
            if (!report.failed("first.ps") && !g2(x, x).is_zero())
                report.issues.push_back(CheckIssue{"first.ps", ctx, {x}, g2(x, x)});
    }

    for (const auto& x1 : el) {
        const Cochain f3 = fix_slots(fam.phi, {{0, x1}});
        const Cochain g2 = fix_slots(theta, {{0, x1}});
        const std::string ctx = "x1=" + x1.to_string();
        for (const auto& x : el)
            for (const auto& y : el) {
                for (const auto& z : el) {
                    if (!report.failed("second.braid1") && !braid1(f3, g2, x, y, z).is_zero())
                        report.issues.push_back(CheckIssue{"second.braid1", ctx, {x, y, z}, braid1(f3, g2, x, y, z)});
                    if (!report.failed("second.braid2") && !braid2(f3, g2, x, y, z).is_zero())
                        report.issues.push_back(CheckIssue{"second.braid2", ctx, {x, y, z}, braid2(f3, g2, x, y, z)});
                }
                if (!report.failed("second.sym") && !A.sub(g2(x, y), g2(y, x)).is_zero())
                    report.issues.push_back(CheckIssue{"second.sym", ctx, {x, y}, A.sub(g2(x, y), g2(y, x))});
            }
        for (const auto& x : el)
            if (!report.failed("second.ps") && !g2(x, x).is_zero())
                report.issues.push_back(CheckIssue{"second.ps", ctx, {x}, g2(x, x)});
    }

    return report;
}

}  // namespace altext
