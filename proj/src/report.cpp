#include "awgraph/report.hpp"

#include <cmath>
#include <sstream>

namespace awgraph {

using nlohmann::json;

double quantize(double x)
{
    const double r = std::round(x * 1e10) / 1e10;
    return r == 0.0 ? 0.0 : r;
}

double residual_bound(double x)
{
    if (!(x > 1e-10))
        return 1e-10;
    // Exact decimal powers avoid 1e-9 printing as 1.0000000000000002e-09.
    return std::stod("1e" + std::to_string(static_cast<int>(std::ceil(std::log10(x) - 1e-12))));
}

json complex_json(Complex z)
{
    return {{"re", quantize(z.real())}, {"im", quantize(z.imag())}};
}

namespace {

json optional_complex(const std::optional<Complex>& z)
{
    return z ? complex_json(*z) : json(nullptr);
}

json residual_json(const Residual& r)
{
    return {{"raw", residual_bound(r.raw)}, {"relative", residual_bound(r.relative)}};
}

json skeleton(const GraphStages& g)
{
    json r;
    r["graph"] = g.graph.name;
    r["n"] = g.graph.n;
    r["D"] = g.drg ? json(g.drg->diameter) : json(nullptr);
    for (const char* key : {"vertex", "ordering", "q", "w", "u", "v", "wstar", "ustar", "vstar", "a", "b", "thin"})
        r[key] = nullptr;
    r["types"] = json::array();
    r["dims"] = {{"T", nullptr}, {"commutant", nullptr}};
    json res;
    for (const char* key : {"awdrg1", "awdrg2", "awdrg3", "central1", "central2", "central3", "membership"})
        res[key] = nullptr;
    r["residuals"] = res;
    r["status"] = "ok";
    return r;
}

json attempt_json(const GraphStages& g, const Attempt& a)
{
    json r = skeleton(g);
    r["vertex"] = a.vertex;
    if (a.ordering)
        r["ordering"] = a.ordering->full();
    r["q"] = optional_complex(a.q);
    if (a.fit) {
        const auto& f = *a.fit;
        r["w"] = complex_json(f.w);
        r["u"] = complex_json(f.u);
        r["v"] = complex_json(f.v);
        r["wstar"] = complex_json(f.wstar);
        r["ustar"] = complex_json(f.ustar);
        r["vstar"] = complex_json(f.vstar);
        r["a"] = complex_json(f.a);
        r["b"] = complex_json(f.b);
    }
    for (const auto& t : a.types) {
        json entry = {{"psi", t.type.psi},
                      {"rho", t.type.rho},
                      {"tau", t.type.tau},
                      {"d", t.type.d},
                      {"multiplicity", t.type.multiplicity()},
                      {"aW", nullptr},
                      {"bW", nullptr},
                      {"c", nullptr},
                      {"kappa", nullptr}};
        if (t.leonard) {
            entry["aW"] = complex_json(t.leonard->aW);
            entry["bW"] = complex_json(t.leonard->bW);
            entry["c"] = complex_json(t.c);
            entry["kappa"] = complex_json(t.kappa);
        }
        r["types"].push_back(entry);
    }
    if (a.algebra)
        r["dims"]["T"] = a.algebra->dim();
    if (a.commutant_dim)
        r["dims"]["commutant"] = *a.commutant_dim;
    if (a.triple) {
        const auto& res = a.triple->residuals;
        auto& out = r["residuals"];
        out["awdrg1"] = residual_json(res.awdrg1);
        out["awdrg2"] = residual_json(res.awdrg2);
        out["awdrg3"] = residual_json(res.awdrg3);
        out["central1"] = residual_json(res.central1);
        out["central2"] = residual_json(res.central2);
        out["central3"] = residual_json(res.central3);
        out["membership"] = residual_json(res.membership);
    }
    if (a.thin)
        r["thin"] = *a.thin;
    r["status"] = a.status;
    return r;
}

std::string graph_status(ErrorKind kind)
{
    switch (exit_code(kind)) {
    case 1: return "input_error";
    case 2: return "not_distance_regular";
    case 3: return "not_q_polynomial";
    default: return "numerical_failure";
    }
}

} // namespace

std::vector<json> build_reports(const PipelineRun& run, Stage stage)
{
    const auto& g = run.graph;
    std::vector<json> out;
    if (g.error) {
        json r = skeleton(g);
        r["status"] = graph_status(g.error->kind());
        out.push_back(std::move(r));
        return out;
    }
    if (stage == Stage::Spectrum) {
        json r = skeleton(g);
        json eig = json::array();
        for (double t : g.spectrum->eigenvalues)
            eig.push_back(quantize(t));
        r["eigenvalues"] = eig;
        r["multiplicities"] = g.spectrum->multiplicities;
        json orders = json::array();
        for (const auto& o : g.orderings)
            orders.push_back(o.full());
        r["orderings"] = orders;
        if (!g.orderings.empty())
            r["ordering"] = g.orderings.front().full();
        out.push_back(std::move(r));
        return out;
    }
    for (const auto& a : run.attempts)
        out.push_back(attempt_json(g, a));
    return out;
}

std::string render_json_lines(const std::vector<json>& reports)
{
    std::string s;
    for (const auto& r : reports) {
        s += r.dump();
        s += '\n';
    }
    return s;
}

namespace {

std::string complex_text(const json& z)
{
    if (z.is_null())
        return "-";
    std::ostringstream os;
    const double re = z["re"].get<double>();
    const double im = z["im"].get<double>();
    os << re;
    if (im != 0)
        os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return os.str();
}

} // namespace

std::string render_text(const std::vector<json>& reports)
{
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "graph " << r["graph"].get<std::string>() << "  n=" << r["n"] << "  D=" << r["D"];
        if (!r["vertex"].is_null())
            os << "  vertex=" << r["vertex"];
        os << "  status=" << r["status"].get<std::string>() << '\n';
        if (r.contains("eigenvalues")) {
            os << "  eigenvalues:";
            for (std::size_t i = 0; i < r["eigenvalues"].size(); ++i)
                os << ' ' << r["eigenvalues"][i].get<double>() << " (x" << r["multiplicities"][i] << ')';
            os << '\n';
        }
        if (!r["ordering"].is_null())
            os << "  ordering: " << r["ordering"].dump() << '\n';
        if (!r["q"].is_null()) {
            os << "  q = " << complex_text(r["q"]) << '\n';
            for (const char* k : {"w", "u", "v", "wstar", "ustar", "vstar", "a", "b"})
                if (!r[k].is_null())
                    os << "  " << k << " = " << complex_text(r[k]) << '\n';
        }
        if (!r["types"].empty()) {
            os << "  types (psi: rho tau d x mult):\n";
            for (const auto& t : r["types"]) {
                os << "    " << t["psi"] << ": " << t["rho"] << ' ' << t["tau"] << ' ' << t["d"] << " x"
                   << t["multiplicity"];
                if (!t["c"].is_null())
                    os << "  aW=" << complex_text(t["aW"]) << "  bW=" << complex_text(t["bW"])
                       << "  c=" << complex_text(t["c"]) << "  kappa=" << complex_text(t["kappa"]);
                os << '\n';
            }
        }
        if (!r["dims"]["T"].is_null())
            os << "  dim T = " << r["dims"]["T"] << "  dim commutant = " << r["dims"]["commutant"] << '\n';
        if (!r["residuals"]["awdrg1"].is_null()) {
            os << "  residuals (relative):";
            for (auto it = r["residuals"].begin(); it != r["residuals"].end(); ++it)
                os << ' ' << it.key() << '=' << (*it)["relative"].get<double>();
            os << '\n';
        }
    }
    return os.str();
}

} // namespace awgraph
