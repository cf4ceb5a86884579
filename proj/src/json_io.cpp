#include "mstate/json_io.hpp"

#include <stdexcept>

#include "mstate/prob_max.hpp"

namespace mst {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(const SchmidtTuple& t) { return {{"coeffs", to_json(t.coeffs)}, {"normalized", t.normalized}}; }

json to_json(const RadoCertificate& c) {
    json terms = json::array();
    for (const auto& t : c.terms) terms.push_back({{"p", to_string(t.probability)}, {"sigma", t.sigma}});
    return {{"terms", terms}};
}

json to_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

json to_json(const PureState& s) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) amps.push_back({s.amps(i).real(), s.amps(i).imag()});
    return {{"dims", s.dims}, {"amps", amps}};
}

json to_json(const LoccProtocol& p) {
    json rounds = json::array();
    for (const auto& r : p.rounds) {
        json ops = json::array();
        for (const auto& m : r.ops) ops.push_back(to_json(m));
        json corr = json::object();
        for (const auto& [k, op] : r.corrections) {
            json factors = json::array();
            for (const auto& f : op.factors) factors.push_back(to_json(f));
            corr[std::to_string(k)] = factors;
        }
        rounds.push_back({{"party", r.party}, {"ops", ops}, {"corrections", corr}, {"fail", r.fail}});
    }
    json out = {{"rounds", rounds}};
    if (p.target) out["target"] = to_json(*p.target);
    return out;
}

json to_json(const Leaf& l) {
    json out = {{"outcomes", l.outcomes}, {"probability", l.probability}, {"failed", l.failed}};
    if (l.fidelity) out["fidelity"] = *l.fidelity;
    return out;
}

json to_json(const ExponentFamily& f) {
    return {{"mu", to_json(f.mu)}, {"lam", to_json(f.lam)}, {"mu_bar", to_json(f.mu_bar)}, {"lam_bar", to_json(f.lam_bar)}};
}

json to_json(const TableauPair& p) { return {{"t_in", p.t_in}, {"t_out", p.t_out}}; }

json to_json(const LuSolution& s) {
    json basis = json::array();
    for (const auto& b : s.basis) basis.push_back(to_json(b));
    json tableaux = json::array();
    for (const auto& t : s.tableaux) tableaux.push_back(to_json(t));
    json out = {{"classification", to_string(s.classification)},
                {"family", to_json(s.family)},
                {"integral", to_json(s.integral)},
                {"nullspace_dim", s.nullspace_dim},
                {"basis", basis},
                {"block_embedding", s.block_embedding},
                {"key", s.key},
                {"tableaux", tableaux}};
    out["a_bar_ratio"] = s.a_bar_ratio ? json(to_string(*s.a_bar_ratio)) : json(nullptr);
    return out;
}

json to_json(const GapCycle& c) {
    json edges = json::array();
    for (auto g : c.edges) edges.push_back(to_string(g));
    return {{"nodes", c.nodes}, {"edges", edges}};
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

SchmidtTuple schmidt_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("coeffs")) throw std::invalid_argument("tuple object needs \"coeffs\"");
        return SchmidtTuple(rationals_from_json(j.at("coeffs")));
    }
    return SchmidtTuple(rationals_from_json(j));
}

namespace {

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("expected a complex number [re, im], got " + j.dump());
}

LocalOperator operator_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a list of factor matrices");
    LocalOperator op;
    for (const auto& f : j) op.factors.push_back(matrix_from_json(f));
    return op;
}

}  // namespace

CMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("expected a matrix");
    const auto rows = static_cast<Eigen::Index>(j.size()), cols = static_cast<Eigen::Index>(j[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

PureState state_from_json(const json& j) {
    if (j.is_string()) return named_state(j.get<std::string>());
    if (!j.is_object() || !j.contains("dims") || !j.contains("amps"))
        throw std::invalid_argument("state needs \"dims\" and \"amps\"");
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    const auto& a = j.at("amps");
    if (!a.is_array()) throw std::invalid_argument("\"amps\" must be an array");
    CVector amps(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) amps(static_cast<Eigen::Index>(i)) = complex_from_json(a[i]);
    return PureState(std::move(dims), std::move(amps));
}

LoccProtocol protocol_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rounds")) throw std::invalid_argument("protocol needs \"rounds\"");
    LoccProtocol p;
    for (const auto& r : j.at("rounds")) {
        Round round;
        round.party = r.at("party").get<std::size_t>();
        for (const auto& m : r.at("ops")) round.ops.push_back(matrix_from_json(m));
        if (r.contains("corrections"))
            for (const auto& [k, v] : r.at("corrections").items())
                round.corrections[static_cast<std::size_t>(std::stoul(k))] = operator_from_json(v);
        if (r.contains("fail"))
            for (const auto& f : r.at("fail")) round.fail.insert(f.get<std::size_t>());
        p.rounds.push_back(std::move(round));
    }
    if (j.contains("target") && !j.at("target").is_null()) p.target = state_from_json(j.at("target"));
    return p;
}

ExponentFamily family_from_json(const json& j) {
    ExponentFamily f;
    f.mu = rationals_from_json(j.at("mu"));
    f.lam = rationals_from_json(j.at("lam"));
    f.mu_bar = rationals_from_json(j.at("mu_bar"));
    f.lam_bar = rationals_from_json(j.at("lam_bar"));
    return f;
}

PureState named_state(const std::string& name) {
    if (name == "w") return make_w();
    if (name == "chi") return make_chi();
    if (name == "psi5") return psi5();
    if (name.rfind("ghz:", 0) == 0) {
        const auto rest = name.substr(4);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected ghz:n:d");
        int n = 0, d = 0;
        try {
            n = std::stoi(rest.substr(0, colon));
            d = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("expected ghz:n:d with integers");
        }
        return make_ghz(n, d);
    }
    throw std::invalid_argument("unknown named state: " + name);
}

}  // namespace mst
