#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mstate/mstate.hpp"
#include "suite.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mst;

namespace {

// Rationals cross the boundary as "p/q" text; the Python layer wraps them in Fraction.
using Text = std::vector<std::string>;

SchmidtTuple tuple_of(const Text& xs) {
    std::vector<Rational> v;
    for (const auto& x : xs) v.push_back(parse_rational(x));
    return SchmidtTuple(std::move(v));
}

Text text_of(const std::vector<Rational>& v) {
    Text out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

GhzLikeState ghz_like(int n, const Text& diag) {
    SchmidtTuple t = tuple_of(diag);
    return {n, static_cast<int>(t.size()), t};
}

py::list checks(const std::vector<suite::Check>& cs) {
    py::list out;
    for (const auto& c : cs) out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
}

}  // namespace

PYBIND11_MODULE(_mstate, m) {
    m.doc() = "Exact multipartite state transformation tools";

    auto base = py::register_exception<std::runtime_error>(m, "MstateError");
    py::register_exception<resource_error>(m, "ResourceError", base.ptr());
    py::register_exception<unsupported_error>(m, "UnsupportedError", base.ptr());
    py::register_exception<no_certificate_error>(m, "NoCertificateError", base.ptr());

    m.def("sorted_tuple", [](const Text& xs) { return text_of(tuple_of(xs).coeffs); }, "coeffs"_a);
    m.def("majorizes", [](const Text& a, const Text& b) { return majorizes(tuple_of(a), tuple_of(b)); }, "a"_a, "b"_a);
    m.def(
        "rado_decompose",
        [](const Text& target, const Text& source) {
            std::vector<std::pair<std::string, Permutation>> out;
            for (const auto& t : rado_decompose(tuple_of(target), tuple_of(source)).terms)
                out.emplace_back(to_string(t.probability), t.sigma);
            return out;
        },
        "target"_a, "source"_a);

    m.def("decide_ghz_transform",
          [](int n, const Text& src, const Text& dst) { return decide_ghz_transform(ghz_like(n, src), ghz_like(n, dst)); },
          "n"_a, "src"_a, "dst"_a);
    m.def(
        "ghz_protocol_success",
        [](int n, const Text& src, const Text& dst) {
            auto p = synthesize_ghz_protocol(ghz_like(n, src), ghz_like(n, dst));
            return success_probability(simulate(p, ghz_like_state(ghz_like(n, src)).normalized()));
        },
        "n"_a, "src"_a, "dst"_a);
    m.def("two_copy_closed_form",
          [](const std::string& d, const std::string& a1, const std::string& a2) {
              return two_copy_closed_form(parse_rational(d), parse_rational(a1), parse_rational(a2));
          },
          "delta"_a, "alpha1"_a, "alpha2"_a);
    m.def("trivial_subgroup_feasible",
          [](const std::string& d, const std::string& a1, const std::string& a2) {
              return trivial_subgroup_feasible(parse_rational(d), parse_rational(a1), parse_rational(a2));
          },
          "delta"_a, "alpha1"_a, "alpha2"_a);

    m.def("catalyzes", [](const Text& s, const Text& d, const Text& c) { return catalyzes(tuple_of(s), tuple_of(d), tuple_of(c)); },
          "src"_a, "dst"_a, "cat"_a);
    m.def("k_copy_comparable",
          [](const Text& s, const Text& d, unsigned k) { return k_copy_comparable(tuple_of(s), tuple_of(d), k); }, "src"_a,
          "dst"_a, "k"_a);
    m.def(
        "find_catalyst",
        [](const Text& s, const Text& d, int dim, long grid) -> std::optional<Text> {
            auto c = find_catalyst(tuple_of(s), tuple_of(d), dim, grid);
            if (!c) return std::nullopt;
            return text_of(c->coeffs);
        },
        "src"_a, "dst"_a, "cat_dim"_a = 4, "grid"_a = 100);

    m.def("joint_closed_form", [](const std::string& eps) { return to_string(joint_closed_form(parse_rational(eps))); },
          "eps"_a);
    m.def(
        "pmax_joint",
        [](const std::string& eps) {
            const Rational e = parse_rational(eps), n_sq = (1 + e) / 2;
            return to_string(pmax_joint_two_state(h1_diag(e), h2_diag(e), n_sq, n_sq));
        },
        "eps"_a, "Exact joint probability for the psi5 seeds at eps.");
    m.def(
        "three_branch_success",
        [](double eps) {
            auto s = build_three_branch_protocol(psi5(), eps);
            return success_probability(simulate(s.protocol, s.input));
        },
        "eps"_a);

    m.def("lu_equivalent",
          [](const Text& mu, const Text& lam, const Text& mb, const Text& lb) {
              return lu_equivalent(tuple_of(mu), tuple_of(lam), tuple_of(mb), tuple_of(lb));
          },
          "mu"_a, "lam"_a, "mu_bar"_a, "lam_bar"_a);
    m.def(
        "enumerate_solutions",
        [](int dmu, int dlam, bool direct_sum, bool trivial) {
            EnumOptions o;
            o.include_direct_sum = direct_sum;
            o.include_trivial = trivial;
            json out = json::array();
            for (const auto& s : enumerate_solutions(dmu, dlam, o)) out.push_back(to_json(s));
            return out.dump();
        },
        "d_mu"_a, "d_lam"_a, "include_direct_sum"_a = false, "include_trivial"_a = false);
    m.def("construct_qubit_solution", [](int d, int d1, int d2) { return to_json(construct_qubit_solution(d, d1, d2)).dump(); },
          "d"_a, "d1"_a, "d2"_a);

    m.def("source_entanglement", [](const Text& lam) { return to_string(source_entanglement(tuple_of(lam))); }, "lam"_a);
    m.def(
        "nonadditivity_gap",
        [](const std::string& a, const std::string& b, const std::string& c, const std::string& bp, const std::string& cp) {
            DirectSumParams p{parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(bp), parse_rational(cp)};
            auto r = nonadditivity_experiment(p);
            return py::make_tuple(r.lu_equivalent, to_string(r.gap));
        },
        "a"_a = "1/2", "b"_a = "1/3", "c"_a = "1/4", "b_prime"_a = "1/5", "c_prime"_a = "1/6");

    m.def("acceptance_criteria", [] { return checks(suite::acceptance_criteria()); });
    m.def("published_examples", [] { return checks(suite::published_examples()); });
}
