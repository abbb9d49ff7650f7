#ifndef ALTEXT_REPORT_HPP
#define ALTEXT_REPORT_HPP

#include <string>
#include <vector>

#include "altext/abelian.hpp"

namespace altext {

/// One violated condition: the first offending argument tuple in enumeration
/// order, together with the residual value of the violated equation.
struct CheckIssue {
    std::string condition;
    std::string context;  // slice information such as "z=(1)"; empty when global
    std::vector<GroupElem> args;
    GroupElem residual;

    std::string to_string() const;
};

/// Outcome of a verification pass.  Every violated condition is listed with
/// its first offending tuple; a condition that already failed is not scanned
/// further.
struct CheckReport {
    std::vector<std::string> conditions;  // all conditions that were evaluated
    std::vector<CheckIssue> issues;

    bool ok() const { return issues.empty(); }
    bool failed(const std::string& condition) const;
    void merge(const CheckReport& sub, const std::string& context);
    std::string summary() const;
};

}  // namespace altext

#endif
