#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "stabent/distinguisher.hpp"
#include "stabent/estimator.hpp"
#include "stabent/statevector.hpp"
#include "stabent/tableau.hpp"
#include "stabent/weyl.hpp"

namespace stabent::cli {

namespace {

// Usage problems detected after CLI11 parsing (bad cut, conflicting flags).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit_path;
    std::string cut;
    std::optional<double> epsilon;
    double delta = 0.1;
    std::optional<std::size_t> k;
    std::optional<std::size_t> t;
    std::uint64_t seed = 1;
    std::string backend = "auto";
    std::string output;
    std::size_t dense_cap = kDefaultDenseCap;

    // distinguish only
    double f_level = 0;
    double g_level = 0;
    std::size_t t_prime = 0;
    std::size_t trials = 1;
    std::string truth;
};

Backend backend_from_name(const std::string& name) {
    if (name == "tableau") return Backend::Tableau;
    if (name == "dense") return Backend::Dense;
    return Backend::Auto;
}

std::string_view backend_name(Backend b) { return b == Backend::Tableau ? "tableau" : "dense"; }

Cut make_cut(const Options& opt, std::size_t n) {
    if (opt.cut.empty()) {
        std::vector<std::size_t> half;
        for (std::size_t q = 0; q < n / 2; ++q) half.push_back(q);
        return Cut(n, half);
    }
    return Cut(n, parse_cut_list(opt.cut, n));
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file) throw std::runtime_error("cannot write '" + opt.output + "'");
    file << text;
}

std::size_t resolve_k(const Options& opt, const Circuit& c) {
    if (opt.k && opt.t) throw UsageError("give either --k or --t, not both");
    std::size_t k = opt.k ? *opt.k : opt.t ? 2 * *opt.t : 2 * c.non_clifford_count();
    return std::min(k, c.num_qubits());
}

double resolve_epsilon(const Options& opt, std::size_t n) {
    if (opt.epsilon) return *opt.epsilon;
    return n >= 2 ? default_epsilon(n) : 0.125;
}

int run_estimate(const Options& opt, std::ostream& out, std::ostream& err) {
    Circuit c = load_circuit(opt.circuit_path);
    const std::size_t n = c.num_qubits();
    Cut cut = make_cut(opt, n);
    Backend backend = resolve_backend(backend_from_name(opt.backend), c);

    EstimatorParams params;
    params.epsilon = resolve_epsilon(opt, n);
    params.delta = opt.delta;
    params.k = resolve_k(opt, c);
    params.seed = opt.seed;

    BoundReport report;
    if (backend == Backend::Tableau) {
        report = estimate_entropy(weyl_group_from_tableau(simulate_clifford(c)), cut, params);
    } else {
        check_dense_cap(n, opt.dense_cap);
        params.validate(n);
        report = estimate_entropy(simulate_circuit(c, opt.dense_cap), cut, params);
    }
    emit(opt, to_json(report, backend_name(backend)).dump(2) + "\n", out);
    if (report.promise_violated) {
        err << "error: promise violated: dim S = " << report.dim_S << " < n - k = "
            << (n - report.k) << " or the sampled group is not isotropic\n";
        return kPromiseViolated;
    }
    return kOk;
}

int run_oracle(const Options& opt, std::ostream& out) {
    Circuit c = load_circuit(opt.circuit_path);
    const std::size_t n = c.num_qubits();
    Cut cut = make_cut(opt, n);
    check_dense_cap(n, opt.dense_cap);
    double entropy = entanglement_entropy_oracle(simulate_circuit(c, opt.dense_cap), cut,
                                                 opt.dense_cap);
    nlohmann::ordered_json j;
    j["entropy"] = entropy;
    auto cut_a = nlohmann::ordered_json::array();
    for (std::size_t q : cut.a()) cut_a.push_back(q + 1);
    j["cut_A"] = std::move(cut_a);
    j["n"] = n;
    emit(opt, j.dump(2) + "\n", out);
    return kOk;
}

int run_weyl(const Options& opt, std::ostream& out) {
    Circuit c = load_circuit(opt.circuit_path);
    Backend backend = resolve_backend(backend_from_name(opt.backend), c);
    std::optional<StabilizerGroupEstimate> group;
    if (backend == Backend::Tableau) {
        group = weyl_group_from_tableau(simulate_clifford(c));
    } else {
        check_dense_cap(c.num_qubits(), opt.dense_cap);
        group = weyl_group_oracle(simulate_circuit(c, opt.dense_cap), opt.dense_cap);
    }
    nlohmann::ordered_json j;
    j["n"] = c.num_qubits();
    j["dim"] = group->group.rank();
    auto basis = nlohmann::ordered_json::array();
    for (const auto& row : group->group.basis()) basis.push_back(row.to_pauli());
    j["basis"] = std::move(basis);
    j["backend"] = backend_name(backend);
    emit(opt, j.dump(2) + "\n", out);
    return kOk;
}

int run_distinguish(const Options& opt, std::ostream& out) {
    Circuit c = load_circuit(opt.circuit_path);
    const std::size_t n = c.num_qubits();
    if (backend_from_name(opt.backend) == Backend::Tableau) {
        throw BackendError("distinguish runs the sampling estimator on the dense backend");
    }
    check_dense_cap(n, opt.dense_cap);
    if (!opt.truth.empty() && opt.truth != "high" && opt.truth != "low") {
        throw UsageError("--truth must be 'high' or 'low'");
    }

    DistinguisherConfig config;
    config.f_level = opt.f_level;
    config.g_level = opt.g_level;
    config.t_prime = opt.t_prime;
    config.cut = make_cut(opt, n);
    config.delta = opt.delta;
    config.epsilon = opt.epsilon.value_or(0.0);
    config.validate();

    EnsembleSpec source;
    source.name = opt.truth.empty() ? "unknown" : opt.truth;
    source.t_budget = c.non_clifford_count();
    source.generate = [c](std::uint64_t) { return c; };
    if (source.t_budget > config.t_prime) {
        throw UsageError("circuit uses more non-Clifford gates than --t-prime");
    }
    DistinguisherResult result = distinguish(source, config, opt.trials, opt.seed);
    auto j = to_json(result, "dense");
    if (opt.truth.empty()) j["success_rate"] = nullptr;
    emit(opt, j.dump(2) + "\n", out);
    return kOk;
}

}  // namespace

Backend resolve_backend(Backend requested, const Circuit& circuit) {
    if (requested == Backend::Auto) {
        return circuit.is_clifford() ? Backend::Tableau : Backend::Dense;
    }
    if (requested == Backend::Tableau && !circuit.is_clifford()) {
        throw BackendError("circuit contains T/TDG gates; the tableau backend is Clifford-only");
    }
    return requested;
}

std::vector<std::size_t> parse_cut_list(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad cut entry '" + item + "'");
        }
        if (pos != item.size() || value < 1 || value > n) {
            throw UsageError("cut entry '" + item + "' outside [1, " + std::to_string(n) + "]");
        }
        out.push_back(value - 1);
    }
    if (out.empty()) throw UsageError("empty cut");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement entropy bounds for states with large stabilizer dimension"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("circuit", opt.circuit_path, "Circuit file")->required();
        sub->add_option("--cut", opt.cut, "Comma-separated 1-based qubits of side A");
        sub->add_option("--output,-o", opt.output, "Write JSON here instead of stdout");
        sub->add_option("--max-dense-qubits", opt.dense_cap, "Dense backend qubit cap");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--epsilon", opt.epsilon, "Accuracy parameter in (0, 3/8)");
        sub->add_option("--delta", opt.delta, "Failure probability in (0, 1]");
        sub->add_option("--seed", opt.seed, "Sampling seed");
    };

    auto* estimate = app.add_subcommand("estimate", "Bound the entanglement entropy at a cut");
    add_common(estimate);
    add_sampling(estimate);
    estimate->add_option("--k", opt.k, "Promised stabilizer-dimension deficit");
    estimate->add_option("--t", opt.t, "Non-Clifford gate count (k = 2t)");
    estimate->add_option("--backend", opt.backend, "auto, tableau or dense")
        ->check(CLI::IsMember({"auto", "tableau", "dense"}));

    auto* oracle = app.add_subcommand("oracle", "Exact entropy from the dense state");
    add_common(oracle);

    auto* weyl = app.add_subcommand("weyl", "Dump the unsigned stabilizer group");
    add_common(weyl);
    weyl->add_option("--backend", opt.backend, "auto, tableau or dense")
        ->check(CLI::IsMember({"auto", "tableau", "dense"}));

    auto* dist = app.add_subcommand("distinguish", "Classify a state as high or low entropy");
    add_common(dist);
    add_sampling(dist);
    dist->add_option("--f-level", opt.f_level, "Entropy of the high ensemble")->required();
    dist->add_option("--g-level", opt.g_level, "Entropy of the low ensemble")->required();
    dist->add_option("--t-prime", opt.t_prime, "Non-Clifford budget of both ensembles");
    dist->add_option("--trials", opt.trials, "Independent estimator runs");
    dist->add_option("--truth", opt.truth, "Known label (high or low) to score against");
    dist->add_option("--backend", opt.backend, "auto or dense")
        ->check(CLI::IsMember({"auto", "tableau", "dense"}));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("stabent");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*estimate) return run_estimate(opt, out, err);
        if (*oracle) return run_oracle(opt, out);
        if (*weyl) return run_weyl(opt, out);
        if (*dist) return run_distinguish(opt, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kParseError;
    } catch (const BackendError& e) {
        err << "backend error: " << e.what() << '\n';
        return kBackendMismatch;
    } catch (const CapExceeded& e) {
        err << "backend error: " << e.what() << '\n';
        return kBackendMismatch;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace stabent::cli
