#include "altext/biext.hpp"

#include <stdexcept>

#include "altext/detail/table_system.hpp"

namespace altext {

namespace {

void require_shape(const Cochain& c, int arity, const char* what) {
    if (c.arity() != arity)
        throw std::invalid_argument(std::string(what) + " must have arity " + std::to_string(arity));
}

// Records the first offending tuple per condition.
struct Scan {
    CheckReport& report;

    void condition(const std::string& name) { report.conditions.push_back(name); }

    void expect_zero(const std::string& name, const std::vector<GroupElem>& args, const GroupElem& residual) {
        if (residual.is_zero() || report.failed(name)) return;
        report.issues.push_back(CheckIssue{name, "", args, residual});
    }
};

}  // namespace

BiextPair make_biext_pair(Cochain g, Cochain h) {
    require_shape(g, 3, "g");
    require_shape(h, 3, "h");
    if (!g.same_shape(h)) throw std::invalid_argument("g and h must share base and coefficient groups");
    return BiextPair{std::move(g), std::move(h)};
}

CheckReport check_biext_pair(const BiextPair& p, bool require_commutative) {
    require_shape(p.g, 3, "g");
    require_shape(p.h, 3, "h");
    if (!p.g.same_shape(p.h)) throw std::invalid_argument("g and h must share base and coefficient groups");

    const FinAbGroup& B = p.base();
    const FinAbGroup& A = p.coeff();
    const auto el = B.enumerate();

    CheckReport report;
    Scan scan{report};
    scan.condition("bicocyc.g");
    scan.condition("bicocyc.h");
    scan.condition("bicompat");
    if (require_commutative) {
        scan.condition("bicom.g");
        scan.condition("bicom.h");
    }

    for (const auto& b1 : el)
        for (const auto& b2 : el)
            for (const auto& b3 : el)
                for (const auto& bp : el) {
                    // 2-cocycle in the paired slots, other slot fixed:
                    // g(b2,b3;b') - g(b1+b2,b3;b') + g(b1,b2+b3;b') - g(b1,b2;b')
                    GroupElem r = A.sub(A.add(p.g(b2, b3, bp), p.g(b1, B.add(b2, b3), bp)),
                                        A.add(p.g(B.add(b1, b2), b3, bp), p.g(b1, b2, bp)));
                    scan.expect_zero("bicocyc.g", {b1, b2, b3, bp}, r);

                    r = A.sub(A.add(p.h(bp, b2, b3), p.h(bp, b1, B.add(b2, b3))),
                              A.add(p.h(bp, B.add(b1, b2), b3), p.h(bp, b1, b2)));
                    scan.expect_zero("bicocyc.h", {bp, b1, b2, b3}, r);
                }

    for (const auto& b1 : el)
        for (const auto& b2 : el)
            for (const auto& c1 : el)
                for (const auto& c2 : el) {
                    GroupElem lhs = A.sub(p.h(B.add(b1, b2), c1, c2), A.add(p.h(b1, c1, c2), p.h(b2, c1, c2)));
                    GroupElem rhs = A.sub(p.g(b1, b2, B.add(c1, c2)), A.add(p.g(b1, b2, c1), p.g(b1, b2, c2)));
                    scan.expect_zero("bicompat", {b1, b2, c1, c2}, A.sub(lhs, rhs));
                }

    if (require_commutative)
        for (const auto& x : el)
            for (const auto& y : el)
                for (const auto& z : el) {
                    scan.expect_zero("bicom.g", {x, y, z}, A.sub(p.g(x, y, z), p.g(y, x, z)));
                    scan.expect_zero("bicom.h", {x, y, z}, A.sub(p.h(x, y, z), p.h(x, z, y)));
                }

    return report;
}

Cochain lambda_of(const BiextPair& p) {
    const FinAbGroup& B = p.base();
    const FinAbGroup& A = p.coeff();
    const auto el = B.enumerate();
    Cochain lambda(B, A, 2);
    for (const auto& b1 : el)
        for (const auto& b2 : el) {
            const GroupElem s = B.add(b1, b2);
            GroupElem first = A.add(p.g(b1, b2, s), A.add(p.h(b1, b1, b2), p.h(b2, b1, b2)));
            GroupElem second = A.add(p.h(s, b1, b2), A.add(p.g(b1, b2, b1), p.g(b1, b2, b2)));
            if (!(first == second))
                throw std::invalid_argument("lambda formulas disagree at (" + b1.to_string() + "," +
                                            b2.to_string() + "): compatibility violated");
            lambda.set_value({b1, b2}, first);
        }
    return lambda;
}

Cochain second_difference(const Cochain& u) {
    require_shape(u, 1, "u");
    const FinAbGroup& B = u.base();
    const FinAbGroup& A = u.coeff();
    const auto el = B.enumerate();
    Cochain theta(B, A, 3);
    for (const auto& b1 : el)
        for (const auto& b2 : el)
            for (const auto& b3 : el) {
                GroupElem plus = A.add(u(B.add(B.add(b1, b2), b3)), A.add(u(b1), A.add(u(b2), u(b3))));
                GroupElem minus = A.add(u(B.add(b1, b2)), A.add(u(B.add(b1, b3)), u(B.add(b2, b3))));
                theta.set_value({b1, b2, b3}, A.sub(plus, minus));
            }
    return theta;
}

CheckReport check_alt_triple(const BiextPair& p, const Cochain& u) {
    require_shape(u, 1, "u");
    if (!(u.base() == p.base()) || !(u.coeff() == p.coeff()))
        throw std::invalid_argument("u must share the pair's groups");
    CheckReport base = check_biext_pair(p, true);
    if (!base.ok())
        throw std::invalid_argument("alternating triple over an invalid pair: " + base.summary());

    const FinAbGroup& B = p.base();
    const FinAbGroup& A = p.coeff();
    const auto el = B.enumerate();
    const Cochain lambda = lambda_of(p);
    const Cochain theta_u = second_difference(u);

    CheckReport report;
    Scan scan{report};
    scan.condition("symcoc1");
    scan.condition("symcoc2");

    for (const auto& b : el) {
        const GroupElem nb = B.neg(b);
        GroupElem lhs = A.sub(u(nb), u(b));
        GroupElem rhs = A.sub(p.g(b, nb, b), p.h(nb, b, nb));
        scan.expect_zero("symcoc1", {b}, A.sub(lhs, rhs));
    }

    for (const auto& b1 : el)
        for (const auto& b2 : el)
            for (const auto& b3 : el) {
                GroupElem rhs = A.add(A.sub(lambda(B.add(b1, b2), b3), A.add(lambda(b1, b3), lambda(b2, b3))),
                                      A.add(p.g(b1, b2, b3), p.h(b3, b1, b2)));
                scan.expect_zero("symcoc2", {b1, b2, b3}, A.sub(theta_u(b1, b2, b3), rhs));
            }

    return report;
}

AltQuadruple triple_to_quadruple(const BiextPair& p, const Cochain& u) {
    CheckReport pre = check_alt_triple(p, u);
    if (!pre.ok()) throw std::invalid_argument("not an alternating triple: " + pre.summary());

    const FinAbGroup& B = p.base();
    const FinAbGroup& A = p.coeff();
    const auto el = B.enumerate();
    const Cochain lambda = lambda_of(p);
    Cochain phi(B, A, 2);
    for (const auto& b1 : el)
        for (const auto& b2 : el) {
            GroupElem v = A.sub(u(B.add(b1, b2)), A.add(u(b1), A.add(u(b2), lambda(b1, b2))));
            phi.set_value({b1, b2}, v);
        }
    return AltQuadruple{p, std::move(phi), u};
}

CheckReport check_alt_quadruple(const AltQuadruple& q) {
    require_shape(q.phi, 2, "phi");
    require_shape(q.u, 1, "u");

    CheckReport report;
    report.merge(check_biext_pair(q.pair, true), "base pair");
    if (report.failed("bicompat") || report.failed("bicocyc.g") || report.failed("bicocyc.h"))
        return report;  // lambda is not defined for an incompatible pair

    const FinAbGroup& B = q.pair.base();
    const FinAbGroup& A = q.pair.coeff();
    const auto el = B.enumerate();
    const Cochain lambda = lambda_of(q.pair);
    const auto& g = q.pair.g;
    const auto& h = q.pair.h;
    const auto& phi = q.phi;
    const auto& u = q.u;

    Scan scan{report};
    scan.condition("phitriv.1");
    scan.condition("phitriv.2");
    scan.condition("phisym");
    scan.condition("defc.cocycle");
    scan.condition("defc.symmetric");
    scan.condition("ctriv");
    scan.condition("u2");

    Cochain c(B, A, 2);
    for (const auto& b1 : el)
        for (const auto& b2 : el) c.set_value({b1, b2}, A.add(lambda(b1, b2), phi(b1, b2)));

    for (const auto& b1 : el)
        for (const auto& b2 : el)
            for (const auto& bp : el) {
                GroupElem lhs = A.sub(phi(B.add(b1, b2), bp), A.add(phi(b1, bp), phi(b2, bp)));
                GroupElem rhs = A.add(g(b1, b2, bp), h(bp, b1, b2));
                scan.expect_zero("phitriv.1", {b1, b2, bp}, A.sub(lhs, rhs));

                lhs = A.sub(phi(bp, B.add(b1, b2)), A.add(phi(bp, b1), phi(bp, b2)));
                rhs = A.add(h(bp, b1, b2), g(b1, b2, bp));
                scan.expect_zero("phitriv.2", {bp, b1, b2}, A.sub(lhs, rhs));
            }

    for (const auto& b1 : el)
        for (const auto& b2 : el)
            scan.expect_zero("phisym", {b1, b2}, A.sub(phi(b1, b2), phi(b2, b1)));

    CheckReport cocycle = is_cocycle(c);
    for (CheckIssue issue : cocycle.issues) {
        issue.condition = "defc.cocycle";
        report.issues.push_back(std::move(issue));
    }

    for (const auto& b1 : el)
        for (const auto& b2 : el) {
            scan.expect_zero("defc.symmetric", {b1, b2}, A.sub(c(b1, b2), c(b2, b1)));
            GroupElem rhs = A.sub(u(B.add(b1, b2)), A.add(u(b1), u(b2)));
            scan.expect_zero("ctriv", {b1, b2}, A.sub(c(b1, b2), rhs));
        }

    for (const auto& b : el)
        scan.expect_zero("u2", {b}, A.sub(A.add(u(b), u(b)), phi(b, b)));

    return report;
}

namespace {

void add_bitriv_rows(detail::TableSystem& sys, const BiextPair& p) {
    const FinAbGroup& B = p.base();
    const auto el = B.enumerate();
    for (const auto& b1 : el) {
        if (b1.is_zero()) continue;
        for (const auto& b2 : el) {
            if (b2.is_zero()) continue;
            for (const auto& bp : el) {
                if (bp.is_zero()) continue;
                sys.term({B.add(b1, b2), bp}, 1);
                sys.term({b1, bp}, -1);
                sys.term({b2, bp}, -1);
                sys.finish_row(p.g(b1, b2, bp));

                sys.term({bp, B.add(b1, b2)}, 1);
                sys.term({bp, b1}, -1);
                sys.term({bp, b2}, -1);
                sys.finish_row(p.h(bp, b1, b2));
            }
        }
    }
}

}  // namespace

std::optional<Cochain> trivialize_biext(const BiextPair& p) {
    CheckReport pre = check_biext_pair(p, true);
    if (!pre.ok()) throw std::invalid_argument("not a biextension pair: " + pre.summary());
    detail::TableSystem sys(p.base(), p.coeff(), 2);
    add_bitriv_rows(sys, p);
    return sys.solve();
}

std::optional<Cochain> trivialize_alternating(const AltQuadruple& q) {
    CheckReport pre = check_alt_quadruple(q);
    if (!pre.ok()) throw std::invalid_argument("not an alternating quadruple: " + pre.summary());

    const FinAbGroup& B = q.pair.base();
    const auto el = B.enumerate();
    detail::TableSystem sys(B, q.pair.coeff(), 2);
    add_bitriv_rows(sys, q.pair);
    for (const auto& x : el) {
        if (x.is_zero()) continue;
        sys.term({x, x}, 1);
        sys.finish_row(q.u(x));
        for (const auto& y : el) {
            if (y.is_zero()) continue;
            sys.term({x, y}, 1);
            sys.term({y, x}, 1);
            sys.finish_row(q.phi(x, y));
        }
    }
    return sys.solve();
}

}  // namespace altext
