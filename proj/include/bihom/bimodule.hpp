#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

class BiHomBimodule;
using BimodulePtr = std::shared_ptr<const BiHomBimodule>;

// Slot layout of the three-place module associator: V marks the module slot,
// A the algebra slots.
enum class ModulePattern { VAA, AVA, AAV };

// A module carrier over a host algebra: an m-dimensional space with two
// commuting twist maps phi and psi and two action tensors.  rho_l is stored
// algebra-first — entry (i*m + p)*m + q is the coefficient of v_q in
// e_i . v_p — and rho_r module-first — entry (p*n + i)*m + q is the
// coefficient of v_q in v_p . e_i.  Both actions must intertwine the twists
// (phi(a.v) = alpha(a).phi(v) and the three mirror conditions); violations
// are rejected at construction with ModuleMorphismFailed.
class BiHomBimodule {
public:
    BiHomBimodule(std::string label, AlgebraPtr host, std::size_t mdim, LinearMap phi, LinearMap psi,
                  std::vector<Scalar> rho_l, std::vector<Scalar> rho_r);

    static BimodulePtr make(std::string label, AlgebraPtr host, std::size_t mdim, LinearMap phi,
                            LinearMap psi, std::vector<Scalar> rho_l, std::vector<Scalar> rho_r);

    const std::string& label() const { return label_; }
    const AlgebraPtr& host() const { return host_; }
    const ContextPtr& context() const { return host_->context(); }
    std::size_t adim() const { return host_->dim(); }
    std::size_t mdim() const { return mdim_; }
    const LinearMap& phi() const { return phi_; }
    const LinearMap& psi() const { return psi_; }
    const std::vector<Scalar>& rho_l() const { return rho_l_; }
    const std::vector<Scalar>& rho_r() const { return rho_r_; }

    const Scalar& l(std::size_t i, std::size_t p, std::size_t q) const {
        return rho_l_[(i * mdim_ + p) * mdim_ + q];
    }
    const Scalar& r(std::size_t p, std::size_t i, std::size_t q) const {
        return rho_r_[(p * host_->dim() + i) * mdim_ + q];
    }

    Vec act_left(const Vec& a, const Vec& v) const;
    Vec act_right(const Vec& v, const Vec& a) const;

    Vec zero() const { return zero_vec(context(), mdim_); }
    Vec basis(std::size_t p) const { return unit_vec(context(), mdim_, p); }

    // Same bimodule over an extended parameter context.
    BiHomBimodule embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const;

private:
    std::string label_;
    AlgebraPtr host_;
    std::size_t mdim_;
    LinearMap phi_;
    LinearMap psi_;
    std::vector<Scalar> rho_l_;
    std::vector<Scalar> rho_r_;
};

// Raw-tensor actions, for callers that hold action tensors without a
// constructed bimodule (operator-commutativity and the special-pair glue).
Vec tensor_act_left(const ContextPtr& ctx, std::size_t n, std::size_t m,
                    const std::vector<Scalar>& rho_l, const Vec& a, const Vec& v);
Vec tensor_act_right(const ContextPtr& ctx, std::size_t n, std::size_t m,
                     const std::vector<Scalar>& rho_r, const Vec& v, const Vec& a);

// The three-slot module associator.  VAA: (v.a).beta(b) - phi(v).(ab);
// AVA: (a.v).beta(b) - alpha(a).(v.b); AAV: (ab).psi(v) - alpha(a).(b.v).
// Throws PatternMismatch when the argument lengths do not fit the slots.
Vec module_associator(const BiHomBimodule& V, ModulePattern pattern, const Vec& t1, const Vec& t2,
                      const Vec& t3);

// All three associator patterns vanish on basis tuples (the two one-sided
// module conditions plus the middle compatibility condition).
CheckReport check_assoc_bimodule(const BiHomBimodule& V);

// The four alternative-bimodule identities.  The two slot-exchange identities
// are multilinear and always run over all basis tuples; the two alternating
// identities are quadratic in the algebra argument, so linearized mode checks
// their polarized forms over basis tuples while direct modes evaluate them on
// generic or sampled elements.
CheckReport check_alt_bimodule(const BiHomBimodule& V, const CheckMode& mode = CheckMode{});

// The two right Jordan-module identities (a cyclic one and a six-term nested
// one).  Both are multilinear; linearized mode is exhaustive and complete,
// direct modes evaluate them on generic or sampled elements.  The host must
// pass the commutativity and Jordan checks (PrereqFailed otherwise).
CheckReport check_right_jordan_module(const BiHomBimodule& V, const CheckMode& mode = CheckMode{});

// Left mirror; additionally requires psi invertible (PsiNotInvertible), since
// the nested identity applies its inverse to the module argument.
CheckReport check_left_jordan_module(const BiHomBimodule& V, const CheckMode& mode = CheckMode{});

// phi(v).(beta(x)alpha(y)) = (v.beta(x)).beta alpha(y) + (v.beta(y)).alpha
// beta(x) over basis tuples; a right action satisfying it is a right Jordan
// module.
CheckReport check_right_special(const BiHomBimodule& V);

// (beta(x)alpha(y)).psi(v) = beta alpha(x).(alpha(y).v) + beta
// alpha(y).(alpha(x).v); requires psi invertible.
CheckReport check_left_special(const BiHomBimodule& V);

// The three Jordan-bimodule identities: the left/right compatibility
// beta(x).phi(v) = psi(v).alpha(x), a cyclic associator identity, and a
// three-term mixed-pattern identity.  All multilinear, checked exhaustively.
// The host must pass the commutativity and Jordan checks.
CheckReport check_jordan_bimodule(const BiHomBimodule& V);

// rho2(rho1(a, v), beta(b)) = rho1(alpha(a), rho2(v, b)) over basis tuples,
// for raw action tensors of a left action rho1 and a right action rho2 on an
// m-dimensional carrier.
CheckReport check_operator_commutativity(const BiHomAlgebra& host, std::size_t mdim,
                                         const std::vector<Scalar>& rho_l,
                                         const std::vector<Scalar>& rho_r);

// A linear map between two bimodules over the same host; map is
// target.mdim x source.mdim.
struct BimoduleMorphism {
    BimodulePtr source;
    BimodulePtr target;
    LinearMap map;
};

BimoduleMorphism make_bimodule_morphism(BimodulePtr source, BimodulePtr target, LinearMap map);

// f intertwines both twist maps and both actions.
CheckReport check_bimodule_morphism(const BimoduleMorphism& f);

}  // namespace bihom
