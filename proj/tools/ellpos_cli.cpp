// ellpos: command-line front end for the elliptic-surface positivity library.

#include "ellpos/errors.hpp"
#include "ellpos/feasibility.hpp"
#include "ellpos/io.hpp"
#include "ellpos/kodaira.hpp"
#include "ellpos/symdiff.hpp"
#include "ellpos/verdict.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace ellpos;
namespace fs = std::filesystem;

namespace {

enum class Format { Human, Machine };

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(ParseErrorKind::Malformed, "", e.what());
    }
}

int desk_cap()
{
    if (const char* v = std::getenv("ELLPOS_DESK_CAP")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw Error(std::string("ELLPOS_DESK_CAP is not an integer: ") + v);
        }
    }
    return kDefaultDeskScaleCap;
}

void emit(Format f, const Json& machine, const std::string& human)
{
    if (f == Format::Machine)
        std::cout << machine.dump(2) << '\n';
    else
        std::cout << human;
}

std::string verdict_file(const std::string& path, Format f)
{
    VerdictReport r = evaluate(parse_surface_text(read_file(path)));
    return f == Format::Machine ? to_json(r).dump(2) + "\n" : to_human(r);
}

void run_batch(const std::string& dir, Format f)
{
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<std::future<std::string>> jobs;
    for (const auto& p : files)
        jobs.push_back(std::async(std::launch::async, [p, f] {
            try {
                return verdict_file(p, f);
            } catch (const Error& e) {
                return std::string("error: ") + e.what() + "\n";
            }
        }));
    if (f == Format::Machine) {
        Json out = Json::object();
        for (std::size_t i = 0; i < files.size(); ++i) {
            std::string s = jobs[i].get();
            out[files[i]] = s.rfind("error: ", 0) == 0 ? Json{{"error", s.substr(7, s.size() - 8)}} : Json::parse(s);
        }
        std::cout << out.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < files.size(); ++i)
        std::cout << "== " << files[i] << '\n' << jobs[i].get();
}

std::string catalog_human(const std::vector<FiberType>& kinds)
{
    std::ostringstream o;
    o << "kind   components  euler  z-length\n";
    for (const auto& t : kinds) {
        FiberModel m = fiber_model(t);
        o << t.name() << std::string(7 - std::min<std::size_t>(6, t.name().size()), ' ') << m.components->size()
          << std::string(12 - std::to_string(m.components->size()).size(), ' ') << euler_number(t)
          << std::string(7 - std::to_string(euler_number(t)).size(), ' ') << m.z_scheme_length() << '\n';
    }
    return o.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Positivity of cotangent bundles of elliptic surfaces"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();

    auto* verdict = app.add_subcommand("verdict", "decide pseudoeffectivity, irregularity and nonvanishing");
    std::string verdict_path, batch_dir;
    verdict->add_option("file", verdict_path, "surface document");
    verdict->add_option("--batch", batch_dir, "evaluate every .json file in a directory")->check(CLI::ExistingDirectory);

    auto* inv = app.add_subcommand("invariants", "numerical invariants of a fibration");
    std::string inv_path;
    inv->add_option("file", inv_path, "surface document")->required();

    auto* zar = app.add_subcommand("zariski", "Zariski decomposition on a curve configuration");
    std::string zar_path, divisor;
    zar->add_option("file", zar_path, "curve configuration, or {\"fiber\": kind}")->required();
    zar->add_option("--divisor", divisor, "comma-separated coefficients")->required();

    auto* sym = app.add_subcommand("symdiff", "invariant twisted symmetric differentials passing the local test");
    int genus = 2, degree = 1, twist = 0;
    sym->add_option("--genus", genus)->required();
    sym->add_option("--i", degree)->required();
    sym->add_option("--j", twist)->required();

    auto* sakai = app.add_subcommand("sakai", "invariant_dim with j = 0 for i = 1..imax");
    int imax = 1;
    sakai->add_option("--genus", genus)->required();
    sakai->add_option("--imax", imax)->required();

    auto* feas = app.add_subcommand("feasibility", "vertical-section feasibility table over II, III, IV, I0*");
    int kmax = 1;
    feas->add_option("--kmax", kmax)->required();

    auto* cat = app.add_subcommand("catalog", "Kodaira fibre catalogue");

    CLI11_PARSE(app, argc, argv);
    const Format f = format == "machine" ? Format::Machine : Format::Human;

    try {
        if (verdict->parsed()) {
            if (!batch_dir.empty()) {
                run_batch(batch_dir, f);
            } else {
                if (verdict_path.empty())
                    throw Error("verdict needs a file or --batch");
                std::cout << verdict_file(verdict_path, f);
            }
        } else if (inv->parsed()) {
            NumericalInvariants n = numerical_invariants(parse_surface_text(read_file(inv_path)).config);
            emit(f, to_json(n), to_human(n));
        } else if (zar->parsed()) {
            CurveConfigPtr config = parse_curve_config(read_json(zar_path));
            ZariskiPair z = zariski_decompose(parse_divisor(config, divisor));
            emit(f, to_json(z), to_human(z));
        } else if (sym->parsed()) {
            int dim = invariant_dim(HyperellipticModel::standard(genus), degree, twist, desk_cap());
            emit(f, Json{{"genus", genus}, {"i", degree}, {"j", twist}, {"invariant_dim", dim}},
                 "invariant_dim(g=" + std::to_string(genus) + ", i=" + std::to_string(degree) +
                     ", j=" + std::to_string(twist) + ") = " + std::to_string(dim) + "\n");
        } else if (sakai->parsed()) {
            Json rows = Json::array();
            std::string human;
            for (int i = 1; i <= imax; ++i) {
                int dim = sakai_check(genus, i, desk_cap());
                rows.push_back({{"i", i}, {"invariant_dim", dim}});
                human += "i=" + std::to_string(i) + "  dim=" + std::to_string(dim) + "\n";
            }
            emit(f, Json{{"genus", genus}, {"rows", rows}}, human);
        } else if (feas->parsed()) {
            Json rows = Json::array();
            std::string human;
            for (const auto& row : fiber_case_table(kmax)) {
                Json j = to_json(row.verdict);
                j["fiber"] = row.fiber.name();
                rows.push_back(std::move(j));
                human += row.fiber.name() + "  k=" + std::to_string(row.k) + "  " + to_string(row.verdict.status) +
                         (row.verdict.status == FeasibilityStatus::Feasible ? " (numerical only)" : "") + "\n";
            }
            emit(f, rows, human);
        } else if (cat->parsed()) {
            const std::vector<FiberType> kinds = {
                FiberType::smooth(2), FiberType::i(1),         FiberType::i(2),
                FiberType::i(3),      FiberType::i_star(0),    FiberType::i_star(1),
                FiberType::of(FiberKind::II),     FiberType::of(FiberKind::III),   FiberType::of(FiberKind::IV),
                FiberType::of(FiberKind::IVStar), FiberType::of(FiberKind::IIIStar), FiberType::of(FiberKind::IIStar)};
            Json rows = Json::array();
            for (const auto& t : kinds) {
                FiberModel m = fiber_model(t);
                rows.push_back({{"kind", t.name()},
                                {"components", m.components->size()},
                                {"euler", euler_number(t)},
                                {"z_length", m.z_scheme_length()},
                                {"multiplicities", m.multiplicities}});
            }
            emit(f, rows, catalog_human(kinds));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
