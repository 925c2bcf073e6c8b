#pragma once

#include "corank/linalg.hpp"
#include "corank/poly.hpp"

#include <optional>

namespace corank {

enum class IdealSide { right, two_sided };

/// One summand coeff * left * g_[generator] * right of a certificate.
struct CertificateTerm {
    Scalar coeff;
    Word left;
    std::size_t generator = 0;
    Word right;
};

/// Explicit witness that a target lies in the ideal generated by a list
/// of polynomials; verifiable by expansion.
struct MembershipCertificate {
    std::vector<CertificateTerm> terms;
};

/// Search for a certificate whose multiplier words have length <= deg_cap.
/// Absent means "no certificate within the cap", not non-membership.
std::optional<MembershipCertificate>
ideal_membership_bounded(const std::vector<Polynomial>& generators,
                         const Polynomial& target, IdealSide side,
                         std::size_t deg_cap);

Polynomial evaluate_certificate(const std::vector<Polynomial>& generators,
                                const MembershipCertificate& cert,
                                const Alphabet& alphabet, Ring ring, bool unital);

} // namespace corank
