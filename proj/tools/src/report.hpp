#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "vlink/diagram.hpp"
#include "vlink/khovanov.hpp"

namespace vtool {

using ordered_json = nlohmann::ordered_json;

// integers that fit int64 stay numbers, larger ones become decimal strings
ordered_json coeff_json(const vlink::Coeff& c);

std::string state_text(int chords, vlink::State s);
std::string label_text(int comps, std::uint32_t labeling);
std::string group_text(const vlink::HomologyEntry& e);

ordered_json homology_json(const vlink::HomologyTable& h);

// full per-diagram report; analyses that refuse become nulls with a
// *_reason field next to them
ordered_json diagram_report(const std::string& file, const vlink::Document& doc,
                            bool timings);

std::string report_text(const ordered_json& r);

}  // namespace vtool
