#include "report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "vlink/bracket.hpp"
#include "vlink/codec.hpp"
#include "vlink/orientation.hpp"
#include "vlink/surface.hpp"

namespace vtool {

using namespace vlink;

ordered_json coeff_json(const Coeff& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

std::string state_text(int chords, State s) {
    if (chords == 0) return "-";
    std::string out;
    for (int k = chords - 1; k >= 0; --k) out += (s >> k) & 1u ? '1' : '0';
    return out;
}

std::string label_text(int comps, std::uint32_t labeling) {
    if (comps == 0) return "1";
    std::string out;
    for (int k = 0; k < comps; ++k) out += (labeling >> k) & 1u ? 'x' : '1';
    return out;
}

std::string group_text(const HomologyEntry& e) {
    std::string out;
    if (e.betti == 1) out = "Z";
    else if (e.betti > 1) out = "Z^" + std::to_string(e.betti);
    for (const auto& t : e.torsion) {
        if (!out.empty()) out += "+";
        out += "Z/" + t.str();
    }
    return out.empty() ? "0" : out;
}

ordered_json homology_json(const HomologyTable& h) {
    ordered_json rows = ordered_json::array();
    for (const auto& [ij, e] : h) {
        ordered_json row;
        row["i"] = ij.first;
        row["j"] = ij.second;
        row["betti"] = e.betti;
        ordered_json tors = ordered_json::array();
        for (const auto& t : e.torsion) tors.push_back(coeff_json(t));
        row["torsion"] = std::move(tors);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

ordered_json diagram_report(const std::string& file, const Document& doc, bool timings) {
    ordered_json r;
    ordered_json tm;
    r["file"] = file;
    r["name"] = doc.name.empty() ? ordered_json(nullptr) : ordered_json(doc.name);
    r["ok"] = true;
    r["level"] = level_text(doc.level());
    r["code"] = codec::serialize(doc);
    r["circles"] = doc.diagram.num_circles();
    r["chords"] = doc.diagram.num_chords();
    r["writhe"] = doc.diagram.writhe();

    auto t0 = std::chrono::steady_clock::now();
    std::optional<LaurentPoly> br;
    try {
        br = kauffman_bracket(doc.diagram);
        r["bracket"] = br->text();
        r["f"] = jones_f(doc.diagram).text();
        auto m = mod4_class(*br);
        r["mod4"] = {{"uniform", m.uniform},
                     {"residue", m.residue ? ordered_json(*m.residue) : ordered_json(nullptr)}};
    } catch (const CapError& e) {
        r["bracket"] = nullptr;
        r["f"] = nullptr;
        r["mod4"] = nullptr;
        r["bracket_reason"] = e.what();
    }
    tm["bracket_ms"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    bool orientable = is_orientable(doc.diagram);
    r["orientable"] = orientable;
    auto ob = obstruction(doc.diagram);
    int nonzero = 0;
    for (const auto& c : ob.cycles) nonzero += c.value != 0;
    r["obstruction"] = {{"cycles", static_cast<int>(ob.cycles.size())}, {"nonzero", nonzero}};
    tm["orientation_ms"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (doc.arrows) {
        GaussDiagram g = doc.gauss();
        auto fs = faces(g);
        auto cb = checkerboard(g);
        r["surface"] = {{"genus", fs.total_genus},
                        {"checkerboard", cb.colorable},
                        {"components", static_cast<int>(fs.components.size())},
                        {"faces", static_cast<int>(fs.faces.size())}};
    } else {
        r["surface"] = nullptr;
        r["surface_reason"] = "requires over/under arrow data";
    }
    tm["surface_ms"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (orientable) {
        try {
            r["khovanov"] = homology_json(homology(build_complex(doc.diagram)));
        } catch (const CapError& e) {
            r["khovanov"] = nullptr;
            r["khovanov_reason"] = e.what();
        }
        r["dsq"] = nullptr;
        r["dsq_reason"] = "not applicable: the diagram is orientable";
    } else {
        r["khovanov"] = nullptr;
        r["khovanov_reason"] = "non-orientable diagram: the complex is undefined";
        try {
            auto rep = dsq_defect(doc.diagram);
            ordered_json entries = ordered_json::array();
            for (const auto& e : rep.entries) {
                int nsrc = rep.state_comps[e.src.state];
                int ndst = rep.state_comps[e.dst.state];
                entries.push_back({{"i", e.i},
                                   {"i_dst", e.i + 2},
                                   {"j", e.j},
                                   {"src_state", state_text(doc.diagram.num_chords(), e.src.state)},
                                   {"src_label", label_text(nsrc, e.src.labeling)},
                                   {"dst_state", state_text(doc.diagram.num_chords(), e.dst.state)},
                                   {"dst_label", label_text(ndst, e.dst.labeling)},
                                   {"coeff", coeff_json(e.coeff)}});
            }
            r["dsq"] = {{"clean", rep.clean()},
                        {"entries", std::move(entries)}};
        } catch (const CapError& e) {
            r["dsq"] = nullptr;
            r["dsq_reason"] = e.what();
        }
    }
    tm["khovanov_ms"] = ms_since(t0);

    if (timings) r["timings"] = std::move(tm);
    return r;
}

namespace {

std::string one_line(std::string code) {
    while (!code.empty() && code.back() == '\n') code.pop_back();
    std::string out;
    for (char c : code) {
        if (c == '\n') out += " ; ";
        else out += c;
    }
    return out;
}

}  // namespace

std::string report_text(const ordered_json& r) {
    std::ostringstream os;
    os << "file: " << r["file"].get<std::string>() << "\n";
    if (!r["ok"].get<bool>()) {
        for (const auto& e : r["errors"]) os << "  error: " << e.get<std::string>() << "\n";
        return os.str();
    }
    if (!r["name"].is_null()) os << "name: " << r["name"].get<std::string>() << "\n";
    os << "level: " << r["level"].get<std::string>() << "\n";
    os << "code: " << one_line(r["code"].get<std::string>()) << "\n";
    os << "circles: " << r["circles"] << "  chords: " << r["chords"] << "  writhe: "
       << r["writhe"] << "\n";
    if (r["bracket"].is_null()) {
        os << "bracket: skipped (" << r["bracket_reason"].get<std::string>() << ")\n";
    } else {
        os << "bracket: " << r["bracket"].get<std::string>() << "\n";
        os << "f: " << r["f"].get<std::string>() << "\n";
        const auto& m = r["mod4"];
        os << "mod4: " << (m["uniform"].get<bool>() ? "uniform" : "mixed");
        if (!m["residue"].is_null()) os << " " << m["residue"];
        os << "\n";
    }
    os << "orientable: " << (r["orientable"].get<bool>() ? "yes" : "no") << "\n";
    if (r["surface"].is_null()) {
        os << "surface: skipped (" << r["surface_reason"].get<std::string>() << ")\n";
    } else {
        const auto& s = r["surface"];
        os << "genus: " << s["genus"] << "  checkerboard: "
           << (s["checkerboard"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (!r["khovanov"].is_null()) {
        os << "khovanov:";
        for (const auto& row : r["khovanov"]) {
            vlink::HomologyEntry e;
            e.betti = row["betti"].get<int>();
            for (const auto& t : row["torsion"])
                e.torsion.push_back(t.is_number() ? vlink::Coeff(t.get<std::int64_t>())
                                                  : vlink::Coeff(t.get<std::string>()));
            os << " (" << row["i"] << "," << row["j"] << ") " << group_text(e) << ";";
        }
        os << "\n";
    } else if (!r["dsq"].is_null()) {
        const auto& d = r["dsq"];
        os << "khovanov: skipped (" << r["khovanov_reason"].get<std::string>() << ")\n";
        os << "dsq: " << (d["clean"].get<bool>() ? "clean" : "defective") << ", "
           << d["entries"].size() << " entries\n";
    } else {
        os << "khovanov: skipped (" << r["khovanov_reason"].get<std::string>() << ")\n";
    }
    return os.str();
}

}  // namespace vtool
