#include "lawson/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "lawson/elliptic.hpp"

namespace lawson::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + Json(it.key()).dump() + ": ";
                dump(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    dump(j[i], out, indent + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += inner;
                dump(j[i], out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += fmt17(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

Json triple_json(const Triple& t) {
    Json j;
    j["case"] = t.is_lawson() ? "Lawson" : "Generalized";
    j["a"] = t.a;
    j["b"] = t.b;
    if (t.is_lawson()) {
        j["c"] = t.c_real();
        j["c_squared"] = t.c2();
    } else {
        j["c"] = t.c;
    }
    j["name"] = to_string(t);
    return j;
}

Json check(const std::string& name, double value, const std::string& relation, double tolerance, bool pass) {
    Json j;
    j["name"] = name;
    j["value"] = value;
    j["relation"] = relation;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    return j;
}

double unit_norm_residual(const Triple& t, int n) {
    const Coefficients co = coefficients(t);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Point6 p = immersion(t, co, 2.0 * kPi * i / n, 2.0 * kPi * j / n);
            double s = 0.0;
            for (double v : p) s += v * v;
            worst = std::max(worst, std::abs(s - 1.0));
        }
    }
    return worst;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Fail: return "fail";
        case Status::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string dump_json(const Json& j) {
    std::string out;
    dump(j, out, 0);
    return out;
}

std::string to_json(const Envelope& e) {
    Json j;
    j["command"] = e.command;
    j["triple"] = e.triple ? triple_json(*e.triple) : Json(nullptr);
    j["payload"] = e.payload;
    j["tolerances"] = e.tolerances;
    j["status"] = to_string(e.status);
    return dump_json(j) + "\n";
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_number_float()) return fmt17(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() || v.is_object()) {
        std::string s = v.dump();
        return s;
    }
    return v.dump();
}

void table_rows(const Json& rows, std::ostream& os) {
    // Columns: union of keys in first-appearance order.
    std::vector<std::string> cols;
    for (const auto& r : rows) {
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
        }
    }
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string s = r.contains(cols[c]) ? scalar_text(r[cols[c]]) : "";
            width[c] = std::max(width[c], s.size());
            line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < cols.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c]) + 2) << cols[c];
    os << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
        }
        os << "\n";
    }
}

}  // namespace

std::string to_text(const Envelope& e) {
    std::ostringstream os;
    os << "command: " << e.command << "\n";
    if (e.triple) os << "triple:  " << to_string(*e.triple) << "\n";
    os << "status:  " << to_string(e.status) << "\n";
    std::size_t key_width = 0;
    for (auto it = e.payload.begin(); it != e.payload.end(); ++it) key_width = std::max(key_width, it.key().size());
    for (auto it = e.tolerances.begin(); it != e.tolerances.end(); ++it) {
        key_width = std::max(key_width, it.key().size() + 2);
    }
    key_width += 2;
    for (auto it = e.payload.begin(); it != e.payload.end(); ++it) {
        const Json& v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << "\n" << it.key() << ":\n";
            table_rows(v, os);
            os << "\n";
        } else {
            os << std::left << std::setw(static_cast<int>(key_width)) << it.key() << scalar_text(v) << "\n";
        }
    }
    if (!e.tolerances.empty()) {
        os << "tolerances:\n";
        for (auto it = e.tolerances.begin(); it != e.tolerances.end(); ++it) {
            os << "  " << std::left << std::setw(static_cast<int>(key_width) - 2) << it.key() << scalar_text(it.value()) << "\n";
        }
    }
    return os.str();
}

int default_grid() {
    if (const char* env = std::getenv("LAWSON_GRID_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 2048;
}

Envelope cmd_classify(const Triple& t) {
    const SurfaceClass sc = classify(t);
    Envelope e{"classify", t};
    e.payload["topology"] = to_string(sc.topology);
    e.payload["subcase"] = to_string(sc.subcase);
    e.payload["covering_degree"] = sc.covering_degree;
    e.payload["S"] = sc.S;
    e.payload["area"] = sc.area;
    e.payload["j"] = sc.j;
    e.payload["functional"] = to_string(sc.functional);
    e.payload["lambda_value"] = sc.lambda_value;
    return e;
}

Envelope cmd_verify(const Triple& t, int grid_n, bool deep) {
    Envelope e{"verify", t};
    Json checks = Json::array();
    bool all = true;
    auto add = [&](Json c) {
        all = all && c["pass"].get<bool>();
        checks.push_back(std::move(c));
    };

    constexpr double unit_tol = 1e-12;
    constexpr double component_tol = 1e-10;
    constexpr double area_tol = 1e-8;
    constexpr double anchor_tol = 1e-4;
    constexpr double sym_zero = 1e-12;
    constexpr double sym_gap = 0.1;

    const double unit = unit_norm_residual(t, 256);
    add(check("unit_norm", unit, "<=", unit_tol, unit <= unit_tol));

    for (int which = 1; which <= 3; ++which) {
        const double r = component_residual(t, which);
        add(check("component_equation_" + std::to_string(which), r, "<=", component_tol, r <= component_tol));
    }

    {
        std::vector<int> grids{128, 256};
        if (deep) grids.push_back(512);
        std::vector<double> res;
        for (int n : grids) res.push_back(takahashi_residual(t, n));
        for (std::size_t i = 0; i < grids.size(); ++i) {
            e.payload["takahashi_residual_" + std::to_string(grids[i])] = res[i];
        }
        for (std::size_t i = 0; i + 1 < res.size(); ++i) {
            const double ratio = res[i] / res[i + 1];
            add(check("takahashi_ratio_" + std::to_string(grids[i]) + "_" + std::to_string(grids[i + 1]), ratio,
                      "in", 0.8, ratio >= 3.2 && ratio <= 4.8));
        }
    }

    {
        const double closed = area_closed(t).area;
        const double quad = area_quadrature(t, 4096);
        const double rel = std::abs(closed - quad) / closed;
        e.payload["area"] = closed;
        add(check("area_oracle", rel, "<=", area_tol, rel <= area_tol));
    }

    const AnchorResiduals anchors = anchor_check(t, grid_n);
    if (anchors.lambda0_c) {
        add(check("anchor_lambda0_c", *anchors.lambda0_c, "<=", anchor_tol, *anchors.lambda0_c <= anchor_tol));
    }
    add(check("anchor_lambda1_max", anchors.lambda1_max, "<=", anchor_tol, anchors.lambda1_max <= anchor_tol));
    add(check("anchor_lambda2_min", anchors.lambda2_min, "<=", anchor_tol, anchors.lambda2_min <= anchor_tol));
    if (deep) {
        const AnchorResiduals fine = anchor_check(t, 2 * grid_n);
        auto order = [&](const std::string& name, double coarse, double finer) {
            // Anchors that the mesh reproduces exactly carry no order information.
            if (coarse < 1e-10) return;
            const double p = std::log2(coarse / finer);
            add(check("order_" + name, p, "in", 0.2, std::abs(p - 2.0) <= 0.2));
        };
        if (anchors.lambda0_c) order("lambda0_c", *anchors.lambda0_c, *fine.lambda0_c);
        order("lambda1_max", anchors.lambda1_max, fine.lambda1_max);
        order("lambda2_min", anchors.lambda2_min, fine.lambda2_min);
    }

    {
        const auto predicted = predicted_identification(t);
        for (Identification phi : {Identification::Phi1, Identification::Phi2, Identification::Phi3}) {
            const double r = symmetry_residual(t, phi, 32);
            if (predicted && *predicted == phi) {
                add(check("symmetry_" + to_string(phi), r, "<=", sym_zero, r <= sym_zero));
            } else {
                add(check("symmetry_" + to_string(phi), r, ">=", sym_gap, r >= sym_gap));
            }
        }
    }

    bool indeterminate = false;
    try {
        const CountReport count = count_N2(t, grid_n);
        e.payload["n2"] = count.n2;
        e.payload["j"] = count.j_closed;
        e.payload["count_epsilon"] = count.epsilon;
        Json per_l = Json::array();
        for (const auto& [l, n] : count.per_l_counts) per_l.push_back(Json{{"l", l}, {"count", n}});
        e.payload["per_l_counts"] = per_l;
        add(check("n2_equals_j", count.n2, "==", count.j_closed, count.agree));
        add(check("lambda0_beyond_last_l", count.lambda0_beyond, ">", 2.0, count.lambda0_beyond > 2.0));
        add(check("lambda3_at_0", count.lambda3_at_0, ">", 2.0, count.lambda3_at_0 > 2.0));
        if (deep) {
            const CountReport fine = count_N2(t, 2 * grid_n);
            add(check("n2_grid_independent", fine.n2, "==", count.n2, fine.n2 == count.n2));
        }
    } catch (const IndeterminateCount& ex) {
        indeterminate = true;
        e.payload["indeterminate"] = ex.what();
    }

    {
        const int l_max = static_cast<int>(std::ceil(t.c_real() - 1e-12)) + 1;
        const bool ok = interlacing_check(t, grid_n, l_max);
        add(check("interlacing", ok ? 1.0 : 0.0, "==", 1.0, ok));
    }

    e.payload["checks"] = checks;
    e.tolerances["grid_n"] = grid_n;
    e.tolerances["deep"] = deep;
    e.tolerances["unit_norm"] = unit_tol;
    e.tolerances["component_equation"] = component_tol;
    e.tolerances["takahashi_ratio"] = Json::array({3.2, 4.8});
    e.tolerances["area_relative"] = area_tol;
    e.tolerances["anchor"] = anchor_tol;
    e.tolerances["symmetry_zero"] = sym_zero;
    e.tolerances["symmetry_gap"] = sym_gap;
    // A failed check outranks an undecided count.
    e.status = !all ? Status::Fail : indeterminate ? Status::Indeterminate : Status::Ok;
    return e;
}

Envelope cmd_spectrum(const Triple& t, int l, Symmetry symmetry, int grid_n, int count) {
    const SpectrumResult r = sl_spectrum({t, l, symmetry}, grid_n, count);
    Envelope e{"spectrum", t};
    e.payload["l"] = l;
    e.payload["symmetry"] = to_string(symmetry);
    e.payload["grid_n"] = r.grid_n;
    e.payload["eigenvalues"] = r.eigenvalues;
    return e;
}

Envelope cmd_table() {
    Envelope e{"table", std::nullopt};
    Json rows = Json::array();
    bool all = true;
    constexpr double tol = 1e-10;
    auto row = [&](const std::string& name, const Triple& t, const std::string& reference_form, double reference) {
        const SurfaceClass sc = classify(t);
        const double rel = std::abs(sc.lambda_value - reference) / reference;
        all = all && rel <= tol;
        Json r;
        r["surface"] = name;
        r["triple"] = to_string(t);
        r["topology"] = to_string(sc.topology);
        r["subcase"] = to_string(sc.subcase);
        r["j"] = sc.j;
        r["Lambda_j"] = sc.lambda_value;
        r["reference"] = reference_form;
        r["reference_value"] = reference;
        r["relative_residual"] = rel;
        rows.push_back(std::move(r));
    };
    const double E_half = elliptic::complete_E(0.5);
    const double K_half = elliptic::complete_K(0.5);
    const double E_bipolar = elliptic::complete_E(2.0 * std::sqrt(2.0) / 3.0);

    row("Clifford torus (metric halved)", validate(Family::Generalized, 0, 0, 1), "4 pi^2", 4.0 * kPi * kPi);
    row("equilateral torus", validate(Family::Generalized, 1, 1, 2), "8 pi^2 / sqrt(3)", 8.0 * kPi * kPi / std::sqrt(3.0));
    row("Klein bottle T(1,0,2)", validate(Family::Generalized, 1, 0, 2), "2 pi (8 E(1/2) - 3 K(1/2))",
        2.0 * kPi * (8.0 * E_half - 3.0 * K_half));
    row("Clifford torus tau(1,1)", validate(Family::Lawson, 1, 1), "8 pi E(0) = 4 pi^2", 4.0 * kPi * kPi);
    row("Lawson torus tau(3,1)", validate(Family::Lawson, 3, 1), "24 pi E(2 sqrt(2) / 3)", 24.0 * kPi * E_bipolar);
    e.payload["surfaces"] = rows;

    const double S012 = area_closed(validate(Family::Generalized, 0, 1, 2)).S;
    const double bipolar = 12.0 * kPi * E_bipolar;
    const double rel = std::abs(S012 - bipolar) / S012;
    Json eq;
    eq["lhs"] = "Lambda_1(T(1,0,2)) = S(0,1,2)";
    eq["lhs_value"] = S012;
    eq["rhs"] = "Lambda_1(bipolar tau(3,1)) = 12 pi E(2 sqrt(2) / 3)";
    eq["rhs_value"] = bipolar;
    eq["relative_residual"] = rel;
    eq["pass"] = rel <= tol;
    all = all && rel <= tol;
    e.payload["klein_bottle_equality"] = Json::array({eq});
    e.tolerances["relative"] = tol;
    e.status = all ? Status::Ok : Status::Fail;
    return e;
}

Envelope cmd_landen(int points) {
    if (points < 2) throw std::invalid_argument("landen needs at least 2 points");
    constexpr double tol = 1e-10;
    Envelope e{"landen", std::nullopt};
    double worst = 0.0;
    double worst_k = 0.0;
    for (int i = 0; i < points; ++i) {
        const double k = 0.99 * i / (points - 1);
        const double g = std::abs(elliptic::landen_gap(k));
        if (g > worst) {
            worst = g;
            worst_k = k;
        }
    }
    e.payload["points"] = points;
    e.payload["k_min"] = 0.0;
    e.payload["k_max"] = 0.99;
    e.payload["max_abs_gap"] = worst;
    e.payload["at_k"] = worst_k;
    e.tolerances["max_abs_gap"] = tol;
    e.status = worst <= tol ? Status::Ok : Status::Fail;
    return e;
}

void write_csv(const Triple& t, int nx, int ny, std::ostream& out) {
    const Coefficients co = coefficients(t);
    out << "x,y,F1,F2,F3,F4,F5,F6\n";
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const double x = 2.0 * kPi * i / nx;
            const double y = 2.0 * kPi * j / ny;
            const Point6 p = immersion(t, co, x, y);
            out << fmt17(x) << ',' << fmt17(y);
            for (double v : p) out << ',' << fmt17(v);
            out << '\n';
        }
    }
}

void write_obj(const Triple& t, int nx, int ny, const std::array<int, 3>& axes, std::ostream& out) {
    const Coefficients co = coefficients(t);
    const int degree = covering_degree(subcase_of(t));
    out << "# " << to_string(t) << " sampled on a " << nx << " x " << ny << " grid of [0, 2pi)^2\n";
    out << "# vertices: projection of F onto axes " << axes[0] << "," << axes[1] << "," << axes[2] << "\n";
    out << "# covering degree " << degree;
    if (degree == 2) {
        out << ": the parameter torus double-covers the surface; the double cover is exported as-is\n";
    } else {
        out << ": the parameter torus maps one-to-one onto the surface\n";
    }
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const Point6 p = immersion(t, co, 2.0 * kPi * i / nx, 2.0 * kPi * j / ny);
            out << "v " << fmt17(p[axes[0] - 1]) << ' ' << fmt17(p[axes[1] - 1]) << ' ' << fmt17(p[axes[2] - 1])
                << '\n';
        }
    }
    auto index = [&](int i, int j) { return ((i % nx) * ny + (j % ny)) + 1; };
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            out << "f " << index(i, j) << ' ' << index(i + 1, j) << ' ' << index(i + 1, j + 1) << ' '
                << index(i, j + 1) << '\n';
        }
    }
}

Envelope cmd_export(const Triple& t, int nx, int ny, ExportFormat format, const std::array<int, 3>& axes,
                    const std::string& path) {
    if (nx < 2 || ny < 2 || nx > 8192 || ny > 8192) {
        throw std::invalid_argument("export grid needs 2 <= nx, ny <= 8192");
    }
    if (format == ExportFormat::Obj) {
        const std::set<int> distinct(axes.begin(), axes.end());
        const bool in_range = std::all_of(axes.begin(), axes.end(), [](int a) { return a >= 1 && a <= 6; });
        if (distinct.size() != 3 || !in_range) {
            throw std::invalid_argument("--axes needs three distinct indices in 1..6");
        }
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    if (format == ExportFormat::Csv) {
        write_csv(t, nx, ny, file);
    } else {
        write_obj(t, nx, ny, axes, file);
    }
    file.flush();
    if (!file) throw std::invalid_argument("failed writing '" + path + "'");

    Envelope e{"export", t};
    e.payload["path"] = path;
    e.payload["format"] = format == ExportFormat::Csv ? "csv" : "obj";
    e.payload["nx"] = nx;
    e.payload["ny"] = ny;
    if (format == ExportFormat::Obj) {
        e.payload["axes"] = axes;
        e.payload["vertices"] = nx * ny;
        e.payload["faces"] = nx * ny;
    } else {
        e.payload["rows"] = nx * ny;
    }
    e.payload["covering_degree"] = covering_degree(subcase_of(t));
    return e;
}

namespace {

Triple triple_from(const std::vector<std::int64_t>& ints, bool lawson) {
    if (lawson) {
        if (ints.size() != 2) throw std::invalid_argument("--lawson takes exactly two integers a b");
        return validate(Family::Lawson, ints[0], ints[1]);
    }
    if (ints.size() != 3) throw std::invalid_argument("expected three integers a b c (or --lawson a b)");
    return validate(Family::Generalized, ints[0], ints[1], ints[2]);
}

std::array<int, 3> parse_axes(const std::string& s) {
    std::array<int, 3> axes{};
    std::stringstream ss(s);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 3) throw std::invalid_argument("--axes takes exactly three indices");
        std::size_t used = 0;
        axes[n++] = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("--axes: bad index '" + item + "'");
    }
    if (n != 3) throw std::invalid_argument("--axes takes exactly three indices");
    return axes;
}

}  // namespace

int report_failure(std::exception_ptr failure, std::ostream& err) {
    try {
        std::rethrow_exception(failure);
    } catch (const InvalidTriple& e) {
        err << "lawson: invalid triple: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const NumericError& e) {
        err << "lawson: numeric failure (grid " << e.grid_n() << "): " << e.what() << "\n";
        return kExitNumeric;
    } catch (const IndeterminateCount& e) {
        err << "lawson: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        err << "lawson: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "lawson: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        err << "lawson: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "lawson: numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal tori and Klein bottles T(a,b,c) in S^5: classification and numerical verification",
                 "lawson"};
    app.require_subcommand(1);

    std::vector<std::int64_t> ints;
    bool lawson = false;
    std::string text_format = "json";
    int grid = default_grid();
    bool deep = false;
    int l = 0;
    std::string symmetry = "full-periodic";
    int count = 8;
    int nx = 128;
    int ny = 128;
    std::string file_format = "csv";
    std::string axes_arg = "1,3,5";
    std::string path;
    int points = 100;

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("params", ints, "a b c (or a b with --lawson)")->required();
        sub->add_flag("--lawson", lawson, "Lawson case c^2 = a^2 + b^2");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", text_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "topology, subcase, area and extremal index");
    add_triple(classify_cmd);
    add_format(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run every residual check for one surface");
    add_triple(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--grid", grid, "spectral grid (nodes per 2pi)");
    verify_cmd->add_flag("--deep", deep, "also run at twice the grid and report convergence orders");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "lowest eigenvalues of the separated problem");
    add_triple(spectrum_cmd);
    add_format(spectrum_cmd);
    spectrum_cmd->add_option("--l", l, "separation parameter")->check(CLI::NonNegativeNumber);
    spectrum_cmd->add_option("--symmetry", symmetry,
                             "full-periodic, even, odd, even-half-pi, odd-half-pi, pi-periodic, pi-antiperiodic");
    spectrum_cmd->add_option("--grid", grid, "nodes per 2pi");
    spectrum_cmd->add_option("--count", count, "number of eigenvalues")->check(CLI::PositiveNumber);

    auto* export_cmd = app.add_subcommand("export", "sample the immersion to CSV or OBJ");
    add_triple(export_cmd);
    export_cmd->add_option("--nx", nx, "samples in x");
    export_cmd->add_option("--ny", ny, "samples in y");
    export_cmd->add_option("--format", file_format, "csv or obj")->check(CLI::IsMember({"csv", "obj"}));
    export_cmd->add_option("--axes", axes_arg, "three distinct coordinate indices in 1..6 for obj");
    export_cmd->add_option("--out", path, "output file")->required();

    auto* table_cmd = app.add_subcommand("table", "landmark surfaces and the Klein bottle equality");
    add_format(table_cmd);

    auto* landen_cmd = app.add_subcommand("landen", "sweep the Landen identity on [0, 0.99]");
    add_format(landen_cmd);
    landen_cmd->add_option("--points", points, "sample count");

    std::vector<const char*> argv;
    argv.push_back("lawson");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    Envelope env;
    try {
        if (*classify_cmd) {
            env = cmd_classify(triple_from(ints, lawson));
        } else if (*verify_cmd) {
            env = cmd_verify(triple_from(ints, lawson), grid, deep);
        } else if (*spectrum_cmd) {
            env = cmd_spectrum(triple_from(ints, lawson), l, parse_symmetry(symmetry), grid, count);
        } else if (*export_cmd) {
            const ExportFormat f = file_format == "obj" ? ExportFormat::Obj : ExportFormat::Csv;
            env = cmd_export(triple_from(ints, lawson), nx, ny, f, parse_axes(axes_arg), path);
        } else if (*table_cmd) {
            env = cmd_table();
        } else if (*landen_cmd) {
            env = cmd_landen(points);
        }
    } catch (...) {
        return report_failure(std::current_exception(), err);
    }

    out << (text_format == "text" ? to_text(env) : to_json(env));
    switch (env.status) {
        case Status::Ok: return kExitOk;
        case Status::Fail: return kExitVerificationFailed;
        case Status::Indeterminate: return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace lawson::cli
