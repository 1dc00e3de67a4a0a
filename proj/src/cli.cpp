#include "gca/cli.hpp"

#include "gca/errors.hpp"
#include "gca/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace gca::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct TargetSpec {
    std::string name;
    std::map<std::string, std::string> params;
};

TargetSpec parse_target(const std::string& text) {
    TargetSpec t;
    const auto colon = text.find(':');
    t.name = text.substr(0, colon);
    if (colon == std::string::npos) return t;
    std::stringstream rest(text.substr(colon + 1));
    std::string kv;
    while (std::getline(rest, kv, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("malformed target parameter '" + kv + "' in '" + text + "'");
        if (!t.params.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second)
            throw UsageError("repeated target parameter '" + kv.substr(0, eq) + "'");
    }
    return t;
}

// pulls parameters out of a target, rejecting leftovers
class Params {
public:
    explicit Params(TargetSpec t) : t_(std::move(t)) {}

    int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
        auto it = t_.params.find(key);
        if (it == t_.params.end()) {
            if (fallback) return *fallback;
            throw UsageError("target '" + t_.name + "' needs parameter '" + key + "'");
        }
        const std::string v = it->second;
        t_.params.erase(it);
        try {
            std::size_t used = 0;
            const int x = std::stoi(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw UsageError("parameter '" + key + "' must be an integer, got '" + v + "'");
        }
    }

    Scalar scalar(const std::string& key, const Scalar& fallback) {
        auto it = t_.params.find(key);
        if (it == t_.params.end()) return fallback;
        const std::string v = it->second;
        t_.params.erase(it);
        try {
            return Scalar::parse(v);
        } catch (const std::exception&) {
            throw UsageError("parameter '" + key + "' must be an exact scalar, got '" + v + "'");
        }
    }

    Field field(Field fallback) {
        auto it = t_.params.find("field");
        if (it == t_.params.end()) return fallback;
        const std::string v = it->second;
        t_.params.erase(it);
        if (v == "Q") return Field::Rational;
        if (v == "Qi") return Field::Gaussian;
        throw UsageError("field must be Q or Qi, got '" + v + "'");
    }

    void done() const {
        if (!t_.params.empty())
            throw UsageError("unknown parameter '" + t_.params.begin()->first + "' for target '" + t_.name + "'");
    }

private:
    TargetSpec t_;
};

const std::set<std::string> kCatalog{"quaternions", "clifford", "clifford-c", "k3", "lambda", "ext-clifford",
                                     "ext-clifford-c", "ext-quaternions", "unital", "unital-reference"};

// catalog names win, so "lambda:l=1/2" is not a path
bool looks_like_path(const std::string& s) {
    if (kCatalog.count(s.substr(0, s.find(':')))) return false;
    return s.find('/') != std::string::npos || (s.size() > 5 && s.ends_with(".json"));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

Json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError("malformed JSON in " + what + ": " + e.what());
    }
}

BilinearFormZ2 parse_form(const std::string& text, int width) {
    if (text == "scalar") return BilinearFormZ2::scalar_product(width);
    if (text == "am") return BilinearFormZ2::albuquerque_majid(width);
    const Json j = parse_json_arg(text, "--form");
    if (j.is_array()) return form_from_json(Json{{"kind", "custom"}, {"matrix", j}});
    return form_from_json(j);
}

std::vector<std::vector<int>> parse_beta(const std::string& text) {
    const Json j = parse_json_arg(text, "--beta");
    if (!j.is_array()) throw SchemaError("beta: expected a matrix");
    std::vector<std::vector<int>> beta;
    for (const auto& row : j) {
        if (!row.is_array()) throw SchemaError("beta: expected rows");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw SchemaError("beta: entries must be integers");
            r.push_back(x.get<int>());
        }
        beta.push_back(std::move(r));
    }
    return beta;
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "'");
}

void require_not_csv(Format f, const std::string& verb) {
    if (f == Format::Csv) throw UsageError("--format csv applies only to 'table', not '" + verb + "'");
}

void print_report(std::ostream& out, const GradedAlgebra& a, const std::string& name, const CheckReport& r, Format f) {
    if (f == Format::Json) {
        Json j = to_json(a, r);
        j["check"] = name;
        out << j.dump(2) << "\n";
        return;
    }
    out << "check " << name << ": " << (r.passed() ? "pass" : "fail") << "\n";
    for (const auto& v : r.violations) out << "  " << v.detail << "\n";
}

// options shared by every verb that takes an algebra
struct AlgebraOptions {
    std::string target;
    std::string project;
    std::string form;
    bool realify = false;
};

void add_algebra_options(CLI::App* sub, AlgebraOptions& o) {
    sub->add_option("--target,-t", o.target, "catalog name[:k=v,...] or algebra JSON file")->required();
    sub->add_option("--project", o.project, "comma-separated degree coordinates to keep (0-based)");
    sub->add_option("--form", o.form, "scalar | am | JSON matrix | JSON form object");
    sub->add_flag("--realify", o.realify, "view a Qi algebra as a Q algebra");
}

GradedAlgebra load(const AlgebraOptions& o) {
    GradedAlgebra a = resolve_target(o.target);
    if (!o.project.empty()) {
        std::vector<int> keep;
        for (const auto& c : split_csv(o.project)) {
            try {
                keep.push_back(std::stoi(c));
            } catch (const std::exception&) {
                throw UsageError("--project expects integers, got '" + c + "'");
            }
        }
        const int w = static_cast<int>(keep.size());
        a = project_grading(a, keep, o.form.empty() ? BilinearFormZ2::scalar_product(w) : parse_form(o.form, w));
    } else if (!o.form.empty()) {
        a = with_form(a, parse_form(o.form, a.width()));
    }
    if (o.realify) {
        if (a.field() != Field::Gaussian) throw UsageError("--realify needs an algebra over Qi");
        a = realify(a);
    }
    return a;
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("GCA_SEED")) {
        try {
            std::size_t used = 0;
            const std::string s(env);
            const auto v = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("GCA_SEED must be a nonnegative integer, got '") + env + "'");
        }
    }
    return seed;
}

}  // namespace

GradedAlgebra resolve_target(const std::string& target) {
    if (target.empty()) throw UsageError("empty target");
    if (looks_like_path(target)) {
        if (!std::filesystem::exists(target)) throw SchemaError("file not found: " + target);
        return load_algebra(target);
    }
    const TargetSpec spec = parse_target(target);
    Params p(spec);
    const std::string& n = spec.name;
    GradedAlgebra a = [&]() -> GradedAlgebra {
        if (n == "quaternions") return quaternions(p.field(Field::Rational));
        if (n == "clifford") {
            const int pp = p.integer("p"), q = p.integer("q");
            return clifford(CliffordSignature::real(pp, q));
        }
        if (n == "clifford-c") return clifford(CliffordSignature::complexified(p.integer("n")));
        if (n == "k3") return k3(p.field(Field::Rational));
        if (n == "lambda") {
            const Scalar l = p.scalar("l", 1);
            return lambda_family(p.field(l.is_real() ? Field::Rational : Field::Gaussian), l);
        }
        if (n == "ext-clifford") {
            const int pp = p.integer("p"), q = p.integer("q");
            return extended_clifford(CliffordSignature::real(pp, q));
        }
        if (n == "ext-clifford-c") return extended_clifford(CliffordSignature::complexified(p.integer("n")));
        if (n == "ext-quaternions") return extended_quaternions();
        if (n == "unital" || n == "unital-reference") {
            const Scalar l = p.scalar("l", 1), m = p.scalar("m", 1), nu = p.scalar("n", 1);
            return n == "unital" ? unital_extension(l, m, nu).algebra : unital_reference(l, m, nu);
        }
        throw UsageError("unknown target '" + n + "'");
    }();
    p.done();
    return a;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (Z2)^n-graded commutative algebra toolkit", "gca"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_text;
    app.add_option("--format,-f", format_text, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = kDefaultTrials;

    AlgebraOptions build_o, table_o, check_o, simple_o, derive_o;
    auto* build = app.add_subcommand("build", "emit an algebra as JSON");
    add_algebra_options(build, build_o);
    std::string out_path;
    build->add_option("--output,-o", out_path, "write to a file instead of stdout");

    auto* table = app.add_subcommand("table", "multiplication table");
    add_algebra_options(table, table_o);

    auto* check = app.add_subcommand("check", "run a structural check");
    std::string check_kind;
    check->add_option("kind", check_kind, "comm | assoc | jacobi | zero-divisors | derivation | reference")
        ->required()
        ->check(CLI::IsMember({"comm", "assoc", "jacobi", "zero-divisors", "derivation", "reference"}));
    add_algebra_options(check, check_o);

    auto* simple = app.add_subcommand("simple", "simplicity verdict");
    add_algebra_options(simple, simple_o);
    bool expect_simple = false;
    simple->add_flag("--expect-simple", expect_simple, "exit 1 on NotSimple");
    simple->add_option("--seed", seed, "seed for the randomized tier");
    simple->add_option("--trials", trials, "random trials");

    auto* derive = app.add_subcommand("derive", "derivation space");
    add_algebra_options(derive, derive_o);
    std::string query;
    derive->add_option("--query", query, "pairs")->check(CLI::IsMember({"pairs"}));

    auto* reduce_form = app.add_subcommand("reduce-form", "embed a form into the scalar product");
    std::string beta_text;
    reduce_form->add_option("--beta", beta_text, "symmetric 0/1 matrix as JSON")->required();

    auto* reduce_group_cmd = app.add_subcommand("reduce-group", "reduce a finitely generated grading group");
    std::string spec_text;
    bool drop = false;
    reduce_group_cmd->add_option("--spec", spec_text, "{\"moduli\":[...],\"beta\":[[...]]} or a file")->required();
    reduce_group_cmd->add_flag("--drop-insignificant", drop, "drop coordinates where the form vanishes");

    auto* oracle = app.add_subcommand("oracle", "Clifford matrix model");
    int m = 1;
    oracle->add_option("--m", m, "1 <= m <= 3")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const bool explicit_format = !format_text.empty();
        const Format fmt = parse_format(explicit_format ? format_text : "text");

        if (*build) {
            require_not_csv(fmt, "build");
            const GradedAlgebra a = load(build_o);
            if (!out_path.empty()) save_algebra(a, out_path);
            else out << to_json(a).dump(2) << "\n";
            return kOk;
        }
        if (*table) {
            const GradedAlgebra a = load(table_o);
            out << emit_table(a, fmt == Format::Csv ? TableFormat::Csv : fmt == Format::Json ? TableFormat::Json : TableFormat::Text);
            return kOk;
        }
        if (*check) {
            require_not_csv(fmt, "check");
            const GradedAlgebra a = load(check_o);
            if (check_kind == "reference") {
                if (check_o.target.rfind("unital", 0) != 0 || check_o.target.rfind("unital-reference", 0) == 0)
                    throw UsageError("check reference applies to unital:l=,m=,n= targets");
                Params p(parse_target(check_o.target));
                const Scalar l = p.scalar("l", 1), mm = p.scalar("m", 1), nu = p.scalar("n", 1);
                const UnitalExtension u = unital_extension(l, mm, nu);
                if (fmt == Format::Json) {
                    Json j = to_json(u.algebra, u);
                    j["passed"] = u.discrepancies.empty();
                    out << j.dump(2) << "\n";
                } else {
                    out << "check reference: " << (u.discrepancies.empty() ? "pass" : "fail") << " ("
                        << u.discrepancies.size() << " entries differ from the reference table)\n";
                    for (const auto& d : u.discrepancies)
                        out << "  " << u.algebra.basis(d.i).label << " " << u.algebra.basis(d.j).label
                            << ": reference " << render(u.algebra, Element::from_terms(d.reference)) << ", derived "
                            << render(u.algebra, Element::from_terms(d.derived)) << "\n";
                }
                return u.discrepancies.empty() ? kOk : kCheckFailed;
            }
            CheckReport r;
            if (check_kind == "comm") r = check_graded_commutative(a);
            else if (check_kind == "assoc") r = check_associative(a);
            else if (check_kind == "jacobi") r = check_odd_graded_jacobi(a);
            else if (check_kind == "zero-divisors") r = zero_divisor_scan(a);
            else r = is_derivation(a, unital_odd_derivation(a));
            print_report(out, a, check_kind, r, fmt);
            return r.passed() ? kOk : kCheckFailed;
        }
        if (*simple) {
            require_not_csv(fmt, "simple");
            const GradedAlgebra a = load(simple_o);
            const SimplicityVerdict v = is_simple(a, {effective_seed(seed), trials});
            if (fmt == Format::Json) {
                out << to_json(a, v).dump(2) << "\n";
            } else {
                out << "status: " << status_name(v.status) << "\n";
                out << "reason: " << v.reason << "\n";
                if (v.witness) out << "witness: " << render(a, *v.witness) << "\n";
                if (v.ideal_dim) out << "ideal_dim: " << *v.ideal_dim << "\n";
                if (v.trials) out << "trials: " << *v.trials << "\n";
            }
            return expect_simple && v.status == SimplicityStatus::NotSimple ? kCheckFailed : kOk;
        }
        if (*derive) {
            require_not_csv(fmt, "derive");
            const GradedAlgebra a = load(derive_o);
            const DerivationSpace d = derivation_space(a);
            const CheckReport closure = check_bracket_closure(a, d);
            std::vector<PairQuery> pairs;
            if (!query.empty()) pairs = derivation_pair_query(a, d);
            if (fmt == Format::Json) {
                Json j = to_json(a, d);
                j["bracket_closure"] = closure.passed();
                if (!query.empty()) {
                    Json q = Json::array();
                    for (const auto& pq : pairs)
                        q.push_back({{"u", a.basis(pq.u).label},
                                     {"v", a.basis(pq.v).label},
                                     {"equal_images", pq.equal_images},
                                     {"maps_to", pq.maps_to}});
                    j["pairs"] = q;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "dimension: " << d.even_dim << "|" << d.odd_dim << "\n";
                for (const auto& s : d.sectors) out << "  sector " << s.degree.bitstring() << ": " << s.basis.size() << "\n";
                out << "bracket closure: " << (closure.passed() ? "pass" : "fail") << "\n";
                for (const auto& pq : pairs)
                    out << "  " << a.basis(pq.u).label << " " << a.basis(pq.v).label
                        << ": T(u)=T(v)!=0 " << (pq.equal_images ? "yes" : "no") << ", T(u)=v "
                        << (pq.maps_to ? "yes" : "no") << "\n";
            }
            return closure.passed() ? kOk : kCheckFailed;
        }
        if (*reduce_form) {
            require_not_csv(fmt, "reduce-form");
            const ReductionMap r = reduce_form_to_scalar(parse_beta(beta_text));
            if (fmt == Format::Text && explicit_format) {
                out << "N = " << r.target_width << "\n";
                for (std::size_t i = 0; i < r.images.size(); ++i) out << "sigma_" << i + 1 << " = " << r.images[i].str() << "\n";
            } else {
                out << to_json(r).dump(2) << "\n";
            }
            return kOk;
        }
        if (*reduce_group_cmd) {
            require_not_csv(fmt, "reduce-group");
            Json sj;
            if (!spec_text.empty() && spec_text.front() != '{') {
                if (!std::filesystem::exists(spec_text)) throw SchemaError("file not found: " + spec_text);
                std::ifstream in(spec_text);
                std::stringstream buf;
                buf << in.rdbuf();
                sj = parse_json_arg(buf.str(), spec_text);
            } else {
                sj = parse_json_arg(spec_text, "--spec");
            }
            const GroupReduction r = reduce_group(group_spec_from_json(sj), drop);
            if (fmt == Format::Text && explicit_format) {
                out << "target width = " << r.target_width << "\n";
                for (std::size_t g = 0; g < r.generator_images.size(); ++g)
                    out << "g" << g + 1 << " -> " << r.generator_images[g].str() << "\n";
            } else {
                out << to_json(r).dump(2) << "\n";
            }
            return kOk;
        }
        if (*oracle) {
            require_not_csv(fmt, "oracle");
            const MatrixModel model = clifford_matrix_model(m);
            const bool rel = matrix_model_relations_hold(model);
            const std::size_t rk = matrix_model_monomial_rank(model);
            const std::size_t full = model.dimension * model.dimension;
            if (fmt == Format::Json) {
                Json gens = Json::array();
                for (const auto& g : model.generators) gens.push_back(matrix_to_json(g, Field::Gaussian));
                out << Json{{"m", m}, {"dimension", model.dimension}, {"relations", rel}, {"monomial_rank", rk},
                            {"full_rank", full}, {"generators", gens}}
                           .dump(2)
                    << "\n";
            } else {
                out << "m = " << m << ", matrices " << model.dimension << "x" << model.dimension << ", "
                    << model.generators.size() << " generators\n";
                out << "relations: " << (rel ? "pass" : "fail") << "\n";
                out << "monomial rank: " << rk << " / " << full << "\n";
            }
            return rel && rk == full ? kOk : kCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SizeError& e) {
        err << "size cap exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const GradingViolation& e) {
        err << "invalid algebra: " << e.what() << "\n";
        return kUsage;
    } catch (const UnitViolation& e) {
        err << "invalid algebra: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError& e) {
        err << "dimension error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace gca::cli
