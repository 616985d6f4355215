#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "report.hpp"
#include "vlink/bracket.hpp"
#include "vlink/codec.hpp"
#include "vlink/khovanov.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"
#include "vlink/search.hpp"
#include "vlink/surface.hpp"

namespace fs = std::filesystem;

namespace vtool {

using namespace vlink;

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_parse_errors(const std::string& path, const std::vector<codec::ParseError>& errs,
                        std::ostream& err) {
    for (const auto& e : errs) {
        if (e.line > 0)
            err << path << ":" << e.line << ":" << e.col << ": " << e.message << "\n";
        else
            err << path << ": " << e.message << "\n";
    }
}

std::optional<Document> load(const std::string& path, std::ostream& err) {
    auto text = read_file(path);
    if (!text) {
        err << path << ": cannot read file\n";
        return std::nullopt;
    }
    auto r = codec::parse(*text);
    if (!r.ok()) {
        print_parse_errors(path, r.errors, err);
        return std::nullopt;
    }
    return r.document;
}

std::string one_line(std::string code) {
    while (!code.empty() && code.back() == '\n') code.pop_back();
    std::string out;
    for (char c : code)
        if (c == '\n') out += " ; ";
        else out += c;
    return out;
}

std::string edge_text(const GraphEdge& e) {
    return e.is_chord ? "chord " + std::to_string(e.index + 1)
                      : "arc " + std::to_string(e.index);
}

std::string dart_text(int dart) {
    return "arc " + std::to_string(dart_arc(dart)) + (dart_dir(dart) > 0 ? " +" : " -");
}

std::string coeff_label(const Coeff& coeff, const std::string& label) {
    if (coeff == 1) return label;
    if (coeff == -1) return "-" + label;
    std::string c = coeff.str();
    return label.size() > 1 ? c + "(" + label + ")" : c + label;
}

std::string hit_summary(const SignedChordDiagram& d) {
    LaurentPoly p = kauffman_bracket(d);
    std::ostringstream os;
    os << " | bracket " << p.text() << " | f " << jones_f(d).text() << " | orientable "
       << (is_orientable(d) ? "yes" : "no") << " | mod4 " << mod4_text(mod4_class(p));
    return os.str();
}

ordered_json hit_json(const std::string& code, const SignedChordDiagram& d) {
    LaurentPoly p = kauffman_bracket(d);
    return ordered_json{{"code", code},
                        {"bracket", p.text()},
                        {"f", jones_f(d).text()},
                        {"orientable", is_orientable(d)},
                        {"mod4", mod4_text(mod4_class(p))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants of virtual and twisted links from Gauss-diagram files"};
    app.name("vlink");
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    int cap = -1;
    bool mod4 = false;

    auto* c_validate = app.add_subcommand("validate", "parse and classify a diagram file");
    c_validate->add_option("file", file)->required();
    c_validate->add_flag("--json", json);

    auto* c_bracket = app.add_subcommand("bracket", "Kauffman bracket polynomial");
    c_bracket->add_option("file", file)->required();
    c_bracket->add_option("--cap", cap, "chord cap override");
    c_bracket->add_flag("--mod4", mod4, "print the mod-4 residue class");
    c_bracket->add_flag("--json", json);

    auto* c_jones = app.add_subcommand("jones", "writhe-normalized f polynomial");
    c_jones->add_option("file", file)->required();
    c_jones->add_option("--cap", cap);
    c_jones->add_flag("--mod4", mod4);
    c_jones->add_flag("--json", json);

    auto* c_orient = app.add_subcommand("orient", "orientability and obstruction cycles");
    c_orient->add_option("file", file)->required();
    c_orient->add_flag("--json", json);

    auto* c_genus = app.add_subcommand("genus", "Carter surface genus (needs O/U tags)");
    c_genus->add_option("file", file)->required();
    c_genus->add_flag("--json", json);

    auto* c_faces = app.add_subcommand("faces", "Carter surface face traversal");
    c_faces->add_option("file", file)->required();
    c_faces->add_flag("--json", json);

    auto* c_checker = app.add_subcommand("checkerboard", "checkerboard colorability");
    c_checker->add_option("file", file)->required();
    c_checker->add_flag("--json", json);

    auto* c_khovanov = app.add_subcommand("khovanov", "integer Khovanov homology table");
    c_khovanov->add_option("file", file)->required();
    c_khovanov->add_option("--cap", cap);
    c_khovanov->add_flag("--json", json);

    auto* c_dsq = app.add_subcommand("dsq", "d^2 defect diagnostic (naive complex)");
    c_dsq->add_option("file", file)->required();
    c_dsq->add_option("--cap", cap);
    c_dsq->add_flag("--json", json);

    auto* c_moves = app.add_subcommand("moves", "enumerate available moves");
    c_moves->add_option("file", file)->required();
    c_moves->add_flag("--json", json);

    int apply_index = 0;
    auto* c_move = app.add_subcommand("move", "apply one enumerated move");
    c_move->add_option("file", file)->required();
    c_move->add_option("--apply", apply_index, "1-based move index")->required();
    c_move->add_flag("--json", json);

    int steps = 10;
    std::uint64_t seed = 1;
    std::string policy = "any";
    int max_chords = -1;
    auto* c_walk = app.add_subcommand("walk", "seeded random move walk");
    c_walk->add_option("file", file)->required();
    c_walk->add_option("--steps", steps);
    c_walk->add_option("--seed", seed);
    c_walk->add_option("--policy", policy, "any | preserving")
        ->check(CLI::IsMember({"any", "preserving"}));
    c_walk->add_option("--max-chords", max_chords, "refuse moves growing past this");
    c_walk->add_flag("--json", json);

    int s_chords = 4, s_circles = 2;
    std::string target_text;
    bool want_nonor = false, want_mixed = false;
    auto* c_search = app.add_subcommand("search", "search the canonical enumeration");
    c_search->add_option("--chords", s_chords);
    c_search->add_option("--circles", s_circles);
    c_search->add_option("--bracket", target_text, "exact bracket polynomial to match");
    c_search->add_flag("--non-orientable", want_nonor);
    c_search->add_flag("--mixed-mod4", want_mixed);
    c_search->add_flag("--json", json);

    bool with_arrows = false;
    auto* c_catalog = app.add_subcommand("catalog", "JSON-lines table of the enumeration");
    c_catalog->add_option("--chords", s_chords)->required();
    c_catalog->add_option("--circles", s_circles)->required();
    c_catalog->add_flag("--arrows", with_arrows, "expand over/under assignments");

    bool timings = false;
    auto* c_report = app.add_subcommand("report", "full report for a file or directory");
    c_report->add_option("path", file)->required();
    c_report->add_flag("--json", json);
    c_report->add_flag("--timings", timings, "include wall-clock timings (not deterministic)");

    std::vector<const char*> argv;
    argv.push_back("vlink");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    std::optional<int> cap_opt;
    if (cap >= 0) cap_opt = cap;

    try {
        if (c_validate->parsed()) {
            auto text = read_file(file);
            if (!text) {
                err << file << ": cannot read file\n";
                return 1;
            }
            auto r = codec::parse(*text);
            if (json) {
                ordered_json o;
                o["ok"] = r.ok();
                if (r.ok()) {
                    o["level"] = level_text(r.document->level());
                    o["circles"] = r.document->diagram.num_circles();
                    o["chords"] = r.document->diagram.num_chords();
                    o["writhe"] = r.document->diagram.writhe();
                    o["code"] = codec::serialize(*r.document);
                } else {
                    ordered_json es = ordered_json::array();
                    for (const auto& e : r.errors)
                        es.push_back({{"line", e.line}, {"col", e.col}, {"message", e.message}});
                    o["errors"] = std::move(es);
                }
                out << o.dump() << "\n";
            } else if (r.ok()) {
                out << "ok: level=" << level_text(r.document->level())
                    << " circles=" << r.document->diagram.num_circles()
                    << " chords=" << r.document->diagram.num_chords()
                    << " writhe=" << r.document->diagram.writhe() << "\n";
            } else {
                print_parse_errors(file, r.errors, err);
            }
            return r.ok() ? 0 : 1;
        }

        if (c_bracket->parsed() || c_jones->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            bool is_f = c_jones->parsed();
            LaurentPoly p = is_f ? jones_f(doc->diagram, cap_opt)
                                 : kauffman_bracket(doc->diagram, cap_opt);
            auto m = mod4_class(p);
            if (json) {
                ordered_json o;
                o[is_f ? "f" : "bracket"] = p.text();
                o["mod4"] = mod4_text(m);
                out << o.dump() << "\n";
            } else {
                out << p.text() << "\n";
                if (mod4) out << "mod4: " << mod4_text(m) << "\n";
            }
            return 0;
        }

        if (c_orient->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            auto ob = obstruction(doc->diagram);
            if (json) {
                ordered_json cycles = ordered_json::array();
                for (const auto& c : ob.cycles) {
                    ordered_json edges = ordered_json::array();
                    for (const auto& e : c.edges) edges.push_back(edge_text(e));
                    cycles.push_back({{"value", c.value}, {"edges", std::move(edges)}});
                }
                ordered_json o{{"orientable", ob.orientable},
                               {"cochain", ob.cochain},
                               {"cycles", std::move(cycles)}};
                out << o.dump() << "\n";
            } else {
                out << "orientable: " << (ob.orientable ? "yes" : "no") << "\n";
                int nonzero = 0;
                for (const auto& c : ob.cycles) nonzero += c.value != 0;
                out << "obstruction cycles: " << ob.cycles.size() << ", nonzero: " << nonzero
                    << "\n";
                for (size_t k = 0; k < ob.cycles.size(); ++k) {
                    out << "  cycle " << k << " [value " << ob.cycles[k].value << "]:";
                    for (size_t q = 0; q < ob.cycles[k].edges.size(); ++q)
                        out << (q ? ", " : " ") << edge_text(ob.cycles[k].edges[q]);
                    out << "\n";
                }
            }
            return 0;
        }

        if (c_genus->parsed() || c_faces->parsed() || c_checker->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            GaussDiagram g = doc->gauss();
            auto fs_ = faces(g);
            auto cb = checkerboard(g);
            if (c_genus->parsed()) {
                if (json) {
                    ordered_json comps = ordered_json::array();
                    for (const auto& c : fs_.components)
                        comps.push_back({{"circles", c.circles},
                                         {"vertices", c.vertices},
                                         {"edges", c.edges},
                                         {"faces", c.faces},
                                         {"chi", c.chi},
                                         {"genus", c.genus}});
                    ordered_json o{{"genus", fs_.total_genus}, {"components", std::move(comps)}};
                    out << o.dump() << "\n";
                } else {
                    out << "total genus: " << fs_.total_genus << "\n";
                    for (size_t k = 0; k < fs_.components.size(); ++k) {
                        const auto& c = fs_.components[k];
                        out << "component " << k << ": circles";
                        for (int ci : c.circles) out << " " << ci;
                        out << "  V=" << c.vertices << " E=" << c.edges << " F=" << c.faces
                            << " chi=" << c.chi << " genus=" << c.genus << "\n";
                    }
                }
            } else if (c_faces->parsed()) {
                if (json) {
                    ordered_json faces_j = ordered_json::array();
                    for (const auto& f : fs_.faces) {
                        ordered_json darts = ordered_json::array();
                        for (int dt : f.darts)
                            darts.push_back({{"arc", dart_arc(dt)}, {"dir", dart_dir(dt)}});
                        faces_j.push_back(
                            {{"component", f.component}, {"darts", std::move(darts)}});
                    }
                    ordered_json o{{"faces", std::move(faces_j)},
                                   {"genus", fs_.total_genus}};
                    out << o.dump() << "\n";
                } else {
                    out << "faces: " << fs_.faces.size() << ", total genus " << fs_.total_genus
                        << "\n";
                    for (size_t k = 0; k < fs_.faces.size(); ++k) {
                        const auto& f = fs_.faces[k];
                        out << "face " << k << " [component " << f.component << "]:";
                        if (f.darts.empty()) out << " (no darts)";
                        for (size_t q = 0; q < f.darts.size(); ++q)
                            out << (q ? ", " : " ") << dart_text(f.darts[q]);
                        out << "\n";
                    }
                }
            } else {
                if (json) {
                    ordered_json o{{"colorable", cb.colorable},
                                   {"face_colors", cb.colorable
                                                       ? ordered_json(cb.face_colors)
                                                       : ordered_json(nullptr)}};
                    out << o.dump() << "\n";
                } else {
                    out << "colorable: " << (cb.colorable ? "yes" : "no") << "\n";
                    if (cb.colorable) {
                        out << "face colors:";
                        for (int c : cb.face_colors) out << " " << c;
                        out << "\n";
                    }
                }
            }
            return 0;
        }

        if (c_khovanov->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            auto h = homology(build_complex(doc->diagram, cap_opt));
            if (json) {
                out << homology_json(h).dump() << "\n";
            } else {
                for (const auto& [ij, e] : h)
                    out << "(" << ij.first << "," << ij.second << "): " << group_text(e)
                        << "\n";
            }
            return 0;
        }

        if (c_dsq->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            int chords = doc->diagram.num_chords();
            bool orientable = is_orientable(doc->diagram);
            auto rep = dsq_defect(doc->diagram, cap_opt);
            auto comps_of = [&](State s) { return rep.state_comps[s]; };
            if (json) {
                ordered_json states = ordered_json::array();
                for (size_t s = 0; s < rep.state_ranks.size(); ++s)
                    states.push_back({{"state", state_text(chords, static_cast<State>(s))},
                                      {"i", rep.state_i[s]},
                                      {"shift", rep.state_shift[s]},
                                      {"comps", rep.state_comps[s]},
                                      {"rank", rep.state_ranks[s].text()}});
                ordered_json entries = ordered_json::array();
                for (const auto& e : rep.entries)
                    entries.push_back(
                        {{"i", e.i},
                         {"i_dst", e.i + 2},
                         {"j", e.j},
                         {"src_state", state_text(chords, e.src.state)},
                         {"src_label", label_text(comps_of(e.src.state), e.src.labeling)},
                         {"dst_state", state_text(chords, e.dst.state)},
                         {"dst_label", label_text(comps_of(e.dst.state), e.dst.labeling)},
                         {"coeff", coeff_json(e.coeff)}});
                ordered_json o{{"orientable", orientable},
                               {"clean", rep.clean()},
                               {"states", std::move(states)},
                               {"entries", std::move(entries)}};
                out << o.dump() << "\n";
            } else {
                out << "orientable: " << (orientable ? "yes" : "no") << "\n";
                for (size_t s = 0; s < rep.state_ranks.size(); ++s)
                    out << "state " << state_text(chords, static_cast<State>(s))
                        << ": i=" << rep.state_i[s] << " shift=" << rep.state_shift[s]
                        << " comps=" << rep.state_comps[s]
                        << " rank=" << rep.state_ranks[s].text() << "\n";
                out << "defect entries: " << rep.entries.size() << "\n";
                for (const auto& e : rep.entries) {
                    std::string src = label_text(comps_of(e.src.state), e.src.labeling);
                    std::string dst = label_text(comps_of(e.dst.state), e.dst.labeling);
                    out << "  " << src << " -> " << coeff_label(e.coeff, dst) << " at (i: "
                        << e.i << " -> " << e.i + 2 << ", j: " << e.j << ")  [state "
                        << state_text(chords, e.src.state) << " -> state "
                        << state_text(chords, e.dst.state) << "]\n";
                }
                if (rep.clean()) out << "clean: d^2 = 0\n";
            }
            return 0;
        }

        if (c_moves->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            auto mv = enumerate_moves(*doc);
            if (json) {
                ordered_json o = ordered_json::array();
                for (size_t k = 0; k < mv.size(); ++k)
                    o.push_back({{"index", k + 1},
                                 {"kind", move_kind_text(mv[k].kind)},
                                 {"text", mv[k].text()},
                                 {"preserves_orientability",
                                  preserves_orientability(*doc, mv[k])}});
                out << o.dump() << "\n";
            } else {
                out << "moves: " << mv.size() << "\n";
                for (size_t k = 0; k < mv.size(); ++k)
                    out << k + 1 << ": " << mv[k].text() << "\n";
            }
            return 0;
        }

        if (c_move->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            auto mv = enumerate_moves(*doc);
            if (apply_index < 1 || apply_index > static_cast<int>(mv.size())) {
                err << "move: index " << apply_index << " out of range (" << mv.size()
                    << " moves available)\n";
                return 1;
            }
            Document res = apply_move(*doc, mv[apply_index - 1]);
            if (json) {
                ordered_json o{{"applied", mv[apply_index - 1].text()},
                               {"code", codec::serialize(res)}};
                out << o.dump() << "\n";
            } else {
                out << codec::serialize(res);
            }
            return 0;
        }

        if (c_walk->parsed()) {
            auto doc = load(file, err);
            if (!doc) return 1;
            WalkPolicy pol = policy == "preserving" ? WalkPolicy::orientability_preserving
                                                    : WalkPolicy::any;
            std::optional<int> mc;
            if (max_chords >= 0) mc = max_chords;
            Walk w = random_walk(*doc, steps, seed, pol, mc);
            if (json) {
                ordered_json steps_j = ordered_json::array();
                for (const auto& st : w.steps)
                    steps_j.push_back(
                        {{"move", st.move.text()}, {"code", codec::serialize(st.result)}});
                const Document& last = w.steps.empty() ? w.start : w.steps.back().result;
                ordered_json o{{"start", codec::serialize(w.start)},
                               {"steps", std::move(steps_j)},
                               {"final", codec::serialize(last)}};
                out << o.dump() << "\n";
            } else {
                out << "start: " << one_line(codec::serialize(w.start)) << "\n";
                for (size_t k = 0; k < w.steps.size(); ++k)
                    out << k + 1 << ": " << w.steps[k].move.text() << " -> "
                        << one_line(codec::serialize(w.steps[k].result)) << "\n";
                const Document& last = w.steps.empty() ? w.start : w.steps.back().result;
                out << "final: " << one_line(codec::serialize(last)) << "\n";
            }
            return 0;
        }

        if (c_search->parsed()) {
            int selectors = (c_search->count("--bracket") > 0) + want_nonor + want_mixed;
            if (selectors != 1) {
                err << "search: choose exactly one of --bracket, --non-orientable, "
                       "--mixed-mod4\n";
                return 1;
            }
            std::vector<Enumerated> hits;
            if (c_search->count("--bracket")) {
                auto target = LaurentPoly::parse(target_text);
                if (!target) {
                    err << "search: cannot parse polynomial '" << target_text << "'\n";
                    return 1;
                }
                hits = search_by_bracket(*target, s_chords, s_circles);
            } else {
                for (auto& e : enumerate_diagrams(s_chords, s_circles)) {
                    bool keep = want_nonor ? !is_orientable(e.diagram)
                                           : !mod4_class(kauffman_bracket(e.diagram)).uniform;
                    if (keep) hits.push_back(std::move(e));
                }
            }
            for (const auto& h : hits) {
                if (json)
                    out << hit_json(h.code, h.diagram).dump() << "\n";
                else
                    out << one_line(h.code) << hit_summary(h.diagram) << "\n";
            }
            return 0;
        }

        if (c_catalog->parsed()) {
            std::set<std::string> seen;
            for (const auto& e : enumerate_diagrams(s_chords, s_circles)) {
                if (!with_arrows) {
                    ordered_json row = hit_json(e.code, e.diagram);
                    row["chords"] = e.diagram.num_chords();
                    row["circles"] = e.diagram.num_circles();
                    row["writhe"] = e.diagram.writhe();
                    out << row.dump() << "\n";
                    continue;
                }
                int c = e.diagram.num_chords();
                for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
                    GaussArrows arrows;
                    arrows.over_occurrence.resize(c);
                    for (int k = 0; k < c; ++k)
                        arrows.over_occurrence[k] = (mask >> k) & 1u;
                    GaussDiagram g{e.diagram, std::move(arrows)};
                    std::string code = codec::canonical_code(g);
                    if (!seen.insert(code).second) continue;
                    ordered_json row = hit_json(code, e.diagram);
                    row["chords"] = c;
                    row["circles"] = e.diagram.num_circles();
                    row["writhe"] = e.diagram.writhe();
                    row["genus"] = genus(g);
                    row["checkerboard"] = checkerboard(g).colorable;
                    out << row.dump() << "\n";
                }
            }
            return 0;
        }

        if (c_report->parsed()) {
            std::vector<std::string> paths;
            if (fs::is_directory(file)) {
                for (const auto& de : fs::directory_iterator(file))
                    if (de.is_regular_file()) paths.push_back(de.path().string());
                std::sort(paths.begin(), paths.end());
            } else {
                paths.push_back(file);
            }
            bool any_fail = false;
            for (const auto& p : paths) {
                ordered_json obj;
                auto text = read_file(p);
                if (!text) {
                    obj = ordered_json{{"file", p},
                                       {"ok", false},
                                       {"errors", ordered_json::array({"cannot read file"})}};
                    any_fail = true;
                } else {
                    auto r = codec::parse(*text);
                    if (!r.ok()) {
                        ordered_json es = ordered_json::array();
                        for (const auto& e : r.errors) {
                            std::ostringstream m;
                            if (e.line > 0) m << e.line << ":" << e.col << ": ";
                            m << e.message;
                            es.push_back(m.str());
                        }
                        obj = ordered_json{
                            {"file", p}, {"ok", false}, {"errors", std::move(es)}};
                        any_fail = true;
                    } else {
                        obj = diagram_report(p, *r.document, timings);
                    }
                }
                if (json)
                    out << obj.dump() << "\n";
                else
                    out << report_text(obj) << "\n";
            }
            return any_fail ? 1 : 0;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace vtool
