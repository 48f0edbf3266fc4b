// superbracket: command-line front end over the library.
//
// Exit codes: 0 ok, 1 validation failure, 2 not applicable, 3 undetermined
// or budget exhausted, 64 usage (bad flags or values), 65 malformed input
// or mode clash, 70 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "superbracket/linalg.hpp"
#include "superbracket/serialize.hpp"

using namespace superbracket;

namespace {

constexpr int kUsage = 64;
constexpr int kSchema = 65;
constexpr int kInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

// Reads an algebra, optionally forcing the axiom mode.
AlgebraFile load(const std::string& path, const std::string& mode)
{
    std::string text = read_input(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!mode.empty() && j.is_object())
        j["axiom_mode"] = mode;
    return algebra_from_json(j);
}

void emit(const Json& j)
{
    std::cout << dump_canonical(j);
}

// "1,0;0,-1" -> rows separated by ';', entries by ','.
Matrix parse_matrix(const Field& f, const std::string& text)
{
    std::vector<std::vector<Scalar>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Scalar> entries;
        std::stringstream es(row);
        std::string cell;
        while (std::getline(es, cell, ','))
            entries.push_back(Scalar::parse(f, cell));
        rows.push_back(std::move(entries));
    }
    if (rows.empty())
        return Matrix(f, 0, 0);
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw UsageError("ragged matrix '" + text + "'");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<unsigned> parse_dims(const std::string& text)
{
    std::vector<unsigned> dims;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            int d = std::stoi(cell);
            if (d < 1)
                throw UsageError("irrep dimensions must be positive");
            dims.push_back(static_cast<unsigned>(d));
        } catch (const std::logic_error&) {
            throw UsageError("bad irrep dimension list '" + text + "'");
        }
    }
    if (dims.empty())
        throw UsageError("empty irrep dimension list");
    return dims;
}

RepMatrices rep_of_dims(const Field& f, const std::vector<unsigned>& dims)
{
    RepMatrices rep = build_irrep(integral_spec(dims[0] - 1, f), f);
    for (std::size_t i = 1; i < dims.size(); ++i)
        rep = direct_sum(rep, build_irrep(integral_spec(dims[i] - 1, f), f));
    return rep;
}

// sl2 + V with P = 0 (or the given P).
SuperAlgebra sl2_plus(const Field& f, const RepMatrices& rep, const PTensor* p)
{
    SuperAlgebra sl2 = sl2_algebra(f);
    if (p)
        return assemble(sl2, rep, *p);
    SuperAlgebra::Builder b(f, 3, rep.dim(), natural_mode(f));
    for (std::size_t k = 0; k < 3; ++k)
        b.bracket(0, 2, k, sl2.bracket(0, 2, k)).bracket(1, 0, k, sl2.bracket(1, 0, k)).bracket(1, 2, k, sl2.bracket(1, 2, k));
    const Matrix* ms[3] = {&rep.e, &rep.h, &rep.f};
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t v = 0; v < rep.dim(); ++v)
            for (std::size_t w = 0; w < rep.dim(); ++w)
                b.action(x, v, w, (*ms[x])(w, v));
    return b.build();
}

Json spec_to_json(const IrrepSpec& s)
{
    return Json{{"m", s.m}, {"dim", s.m + 1}, {"alpha", s.alpha.to_string()}, {"beta", s.beta.to_string()}};
}

// The triple used to view g1 as an sl(2)-module.
Sl2Triple triple_for(const SuperAlgebra& g, long budget)
{
    if (g.dim_even() != 3 || !is_simple_3dim(g))
        throw PreconditionError("even part is not 3-dim simple");
    Sl2Triple std_t = standard_triple(g.field());
    if (verify_triple(g, std_t))
        return std_t;
    TripleSearchOptions opts;
    opts.rational_bound = budget;
    auto r = find_sl2_triple(g, opts);
    if (r.status == TripleSearchStatus::Found)
        return *r.triple;
    if (r.status == TripleSearchStatus::NotSplit)
        throw PreconditionError(r.note);
    throw BudgetError(r.note);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact construction, validation and classification of Lie superalgebras with 3-dim simple even part"};
    app.require_subcommand(1);

    std::string field_text = "q", mode, output = "json";
    long triple_budget = 4;
    std::size_t max_odd_dim = 6;

    auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field_text, "q or fp:<p>"); };

    // validate
    std::string path;
    auto* validate_cmd = app.add_subcommand("validate", "check every axiom, print all violations");
    validate_cmd->add_option("path", path, "algebra JSON, - for stdin")->required();
    validate_cmd->add_option("--mode", mode, "override axiom mode: standard|char3|char2");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "decide case A/B/C with a checked certificate");
    classify_cmd->add_option("path", path, "algebra JSON, - for stdin")->required();
    classify_cmd->add_option("--triple-budget", triple_budget, "coefficient bound for the sl2-triple search over Q");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit a named algebra as JSON");
    std::string name;
    unsigned m = 1, d0 = 1, d1 = 2;
    std::size_t z = 0;
    std::string alpha, beta, q_text, omega_text, phi_text, irreps, from;
    long basis_index = -1;
    construct_cmd->add_option("name", name, "osp12|osp|double|irrep|char3|char2|add-centre|assemble")
        ->required()
        ->check(CLI::IsMember({"osp12", "osp", "double", "irrep", "char3", "char2", "add-centre", "assemble"}));
    add_field(construct_cmd);
    construct_cmd->add_option("--m", m, "irrep: highest weight (dim m+1)");
    construct_cmd->add_option("--alpha", alpha, "irrep: alpha (default [m])");
    construct_cmd->add_option("--beta", beta, "irrep: beta (default 0)");
    construct_cmd->add_option("--d0", d0, "osp: dim V0 (q = identity)");
    construct_cmd->add_option("--d1", d1, "osp: dim V1 (standard symplectic form)");
    construct_cmd->add_option("--q", q_text, "osp: quadratic form, rows ';' entries ','");
    construct_cmd->add_option("--omega", omega_text, "osp: symplectic form, rows ';' entries ','");
    construct_cmd->add_option("--phi", phi_text, "double: automorphism of the even part (default identity)");
    construct_cmd->add_option("--from", from, "double/add-centre: input algebra, - for stdin");
    construct_cmd->add_option("--z", z, "add-centre: number of central odd vectors");
    construct_cmd->add_option("--irreps", irreps, "assemble: irrep dimensions, e.g. 3,1");
    construct_cmd->add_option("--pspace-basis", basis_index, "assemble: use this P-space basis element as P");

    // pspace
    auto* pspace_cmd = app.add_subcommand("pspace", "solution space of the P relations");
    std::string pspace_path;
    bool sweep = false;
    std::uint64_t sweep_p = 5;
    pspace_cmd->add_option("path", pspace_path, "algebra JSON (its P is ignored); stdin if omitted");
    pspace_cmd->add_option("--irreps", irreps, "use sl2 acting on this sum of irreps instead of a file");
    add_field(pspace_cmd);
    pspace_cmd->add_flag("--sweep", sweep, "run the sweep over sums of irreps");
    pspace_cmd->add_option("--p", sweep_p, "sweep prime (5 or 7)");
    pspace_cmd->add_option("--max-odd-dim", max_odd_dim, "sweep: largest total odd dimension (<= 8)");
    pspace_cmd->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "split g1 as an sl2-module");
    decompose_cmd->add_option("path", path, "algebra JSON, - for stdin")->required();
    decompose_cmd->add_option("--triple-budget", triple_budget, "coefficient bound for the sl2-triple search over Q");

    // info
    auto* info_cmd = app.add_subcommand("info", "dimensions, centre, Killing determinant, simplicity");
    info_cmd->add_option("path", path, "algebra JSON, - for stdin")->required();
    info_cmd->add_option("--mode", mode, "override axiom mode: standard|char3|char2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate_cmd) {
            AlgebraFile in = load(path, mode);
            auto report = validate(in.algebra);
            emit(report_to_json(report));
            return report.ok() ? 0 : 1;
        }

        if (*classify_cmd) {
            AlgebraFile in = load(path, "");
            auto report = validate(in.algebra);
            if (!report.ok()) {
                emit(report_to_json(report));
                return 1;
            }
            ClassifyOptions opts;
            opts.triple.rational_bound = triple_budget;
            auto r = classify(in.algebra, opts);
            emit(classification_to_json(r));
            if (r.tag == CaseTag::NotApplicable)
                return 2;
            if (r.tag == CaseTag::Undetermined)
                return 3;
            return 0;
        }

        if (*construct_cmd) {
            Field f = Field::parse(field_text);
            if (name == "osp12") {
                emit(to_json(build_osp12(f)));
            } else if (name == "osp") {
                Matrix q = q_text.empty() ? Matrix::identity(f, d0) : parse_matrix(f, q_text);
                Matrix omega(f, d1, d1);
                if (!omega_text.empty()) {
                    omega = parse_matrix(f, omega_text);
                } else {
                    for (std::size_t i = 0; i + 1 < d1; i += 2) {
                        omega(i, i + 1) = Scalar::one(f);
                        omega(i + 1, i) = Scalar(f, -1);
                    }
                }
                emit(to_json(build_osp({q, omega})));
            } else if (name == "double") {
                SuperAlgebra g = from.empty() ? sl2_algebra(f) : load(from, "").algebra.even_part();
                Matrix phi = phi_text.empty() ? Matrix::identity(g.field(), g.dim_even()) : parse_matrix(g.field(), phi_text);
                emit(to_json(build_double(g, phi)));
            } else if (name == "irrep") {
                IrrepSpec spec = integral_spec(m, f);
                if (!alpha.empty())
                    spec.alpha = Scalar::parse(f, alpha);
                if (!beta.empty())
                    spec.beta = Scalar::parse(f, beta);
                emit(to_json(sl2_plus(f, build_irrep(spec, f), nullptr)));
            } else if (name == "char3") {
                emit(to_json(build_char3_example()));
            } else if (name == "char2") {
                emit(to_json(build_char2_example()));
            } else if (name == "add-centre") {
                if (from.empty())
                    throw UsageError("add-centre needs --from");
                AlgebraFile in = load(from, "");
                emit(to_json(add_centre(in.algebra, z), in.metadata));
            } else if (name == "assemble") {
                if (irreps.empty())
                    throw UsageError("assemble needs --irreps");
                RepMatrices rep = rep_of_dims(f, parse_dims(irreps));
                if (basis_index < 0) {
                    emit(to_json(sl2_plus(f, rep, nullptr)));
                } else {
                    auto space = p_solution_space(sl2_algebra(f), rep);
                    if (static_cast<std::size_t>(basis_index) >= space.dim)
                        throw UsageError("P-space has dimension " + std::to_string(space.dim) + ", no basis element " +
                                         std::to_string(basis_index));
                    emit(to_json(sl2_plus(f, rep, &space.basis[basis_index])));
                }
            }
            return 0;
        }

        if (*pspace_cmd) {
            if (sweep) {
                auto rows = enumerate_reps_and_solve(sweep_p, max_odd_dim);
                if (output == "csv") {
                    std::cout << "p,composition,dim\n";
                    for (const auto& row : rows) {
                        std::cout << row.p << ",";
                        for (std::size_t i = 0; i < row.composition.size(); ++i)
                            std::cout << (i ? "+" : "") << row.composition[i];
                        std::cout << "," << row.dim << "\n";
                    }
                } else {
                    Json arr = Json::array();
                    for (const auto& row : rows)
                        arr.push_back(Json{{"p", row.p}, {"composition", row.composition}, {"dim", row.dim}});
                    emit(arr);
                }
                return 0;
            }
            if (output == "csv")
                throw UsageError("csv output is only available with --sweep");
            if (!irreps.empty()) {
                Field f = Field::parse(field_text);
                emit(p_space_to_json(p_solution_space(sl2_algebra(f), rep_of_dims(f, parse_dims(irreps)))));
                return 0;
            }
            SuperAlgebra g = load(pspace_path.empty() ? "-" : pspace_path, "").algebra;
            emit(p_space_to_json(p_solution_space(g.even_part(), g.action_matrices())));
            return 0;
        }

        if (*decompose_cmd) {
            SuperAlgebra g = load(path, "").algebra;
            Sl2Triple t = triple_for(g, triple_budget);
            RepMatrices rep = rep_from_algebra(g, t);
            auto verdict = jacobson_test(rep);
            Json out{{"jacobson", to_string(verdict)}, {"dim", rep.dim()}};
            if (verdict != JacobsonVerdict::Inconclusive) {
                Json summands = Json::array();
                for (const auto& s : decompose(rep))
                    summands.push_back(spec_to_json(s.spec));
                out["summands"] = summands;
            }
            auto series = composition_series(rep);
            out["composition_factor_dims"] = series.factor_dims;
            out["trivial_submodule_dim"] = series.trivial_submodule.size();
            emit(out);
            return 0;
        }

        if (*info_cmd) {
            SuperAlgebra g = load(path, mode).algebra;
            auto report = validate(g);
            auto centre = supercentre(g);
            Json out{{"field", field_to_json(g.field())},
                     {"dim_even", g.dim_even()},
                     {"dim_odd", g.dim_odd()},
                     {"axiom_mode", to_string(g.mode())},
                     {"valid", report.ok()},
                     {"violation_count", report.violations.size()},
                     {"centre_even_dim", centre.even.size()},
                     {"centre_odd_dim", centre.odd.size()},
                     {"p_is_zero", g.p_is_zero()}};
            if (g.dim_even() == 3) {
                out["killing_determinant"] = linalg::determinant(killing_form(g)).to_string();
                out["even_simple"] = is_simple_3dim(g);
            }
            emit(out);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "schema: " << e.what() << "\n";
        return kSchema;
    } catch (const ModeError& e) {
        std::cerr << "mode: " << e.what() << "\n";
        return kSchema;
    } catch (const FieldError& e) {
        // JSON scalars surface as SchemaError; this is a flag value.
        std::cerr << "field: " << e.what() << "\n";
        return kUsage;
    } catch (const IrrepSpecError& e) {
        std::cerr << "irrep (clause " << e.clause << "): " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const AssemblyError& e) {
        std::cerr << "assembly: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return 0;
}
