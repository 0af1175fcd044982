#include "sl2char/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace sl2char {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json quadg_json(const QuadGNum& v) {
    return ordered_json{{"a", rat_str(v.a())}, {"b", rat_str(v.b())}, {"gsq", rat_str(v.gsq())}};
}

ordered_json cell_json(const CellValueReport& r) {
    ordered_json j;
    j["cell"] = ordered_json{{"z", name(r.cell.z)}, {"n", r.cell.n}, {"nu", r.cell.nu}};
    j["pi"] = r.subject;
    j["lhs"] = quadg_json(r.lhs);
    j["rhs"] = quadg_json(r.rhs);
    j["residual"] = quadg_json(r.residual);
    j["pass"] = r.pass;
    j["mode"] = r.mode;
    j["variant"] = r.variant;
    return j;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const auto& c : cells)
        if (!c.pass) return false;
    for (const auto& [_, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string to_json(const std::vector<SuiteReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& s : reports) {
        ordered_json j;
        j["suite"] = s.suite;
        j["q"] = s.q;
        j["pass"] = s.all_pass();
        j["cells"] = ordered_json::array();
        for (const auto& c : s.cells) j["cells"].push_back(cell_json(c));
        j["checks"] = ordered_json::array();
        for (const auto& [label, ok] : s.checks)
            j["checks"].push_back(ordered_json{{"check", label}, {"pass", ok}});
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

std::string to_tsv(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    os << "suite\tq\tkind\tsubject\tz\tn\tnu\tlhs\trhs\tresidual\tpass\tmode\tvariant\n";
    for (const auto& s : reports) {
        for (const auto& c : s.cells)
            os << s.suite << "\t" << s.q << "\tcell\t" << c.subject << "\t" << name(c.cell.z)
               << "\t" << c.cell.n << "\t" << (c.cell.nu > 0 ? "+" : "-") << "\t" << c.lhs.str()
               << "\t" << c.rhs.str() << "\t" << c.residual.str() << "\t"
               << (c.pass ? "1" : "0") << "\t" << c.mode << "\t" << c.variant << "\n";
        for (const auto& [label, ok] : s.checks)
            os << s.suite << "\t" << s.q << "\tcheck\t" << label << "\t\t\t\t\t\t\t"
               << (ok ? "1" : "0") << "\t\t\n";
    }
    return os.str();
}

std::string report_schema() {
    return R"({
  "$comment": "report: array of suite blocks",
  "type": "array",
  "items": {
    "type": "object",
    "properties": {
      "suite": {"type": "string"},
      "q": {"type": "integer"},
      "pass": {"type": "boolean"},
      "cells": {
        "type": "array",
        "items": {
          "type": "object",
          "properties": {
            "cell": {
              "type": "object",
              "properties": {
                "z": {"enum": ["s0", "s1", "s2", "t0", "t1", "t2", "t3"]},
                "n": {"type": "integer"},
                "nu": {"enum": [1, -1]}
              },
              "required": ["z", "n", "nu"]
            },
            "pi": {"type": "string"},
            "lhs": {"$ref": "#/$defs/quadg"},
            "rhs": {"$ref": "#/$defs/quadg"},
            "residual": {"$ref": "#/$defs/quadg"},
            "pass": {"type": "boolean"},
            "mode": {"enum": ["table", "oracle"]},
            "variant": {"enum": ["corrected", "printed"]}
          },
          "required": ["cell", "lhs", "rhs", "residual", "pass", "mode"]
        }
      },
      "checks": {
        "type": "array",
        "items": {
          "type": "object",
          "properties": {"check": {"type": "string"}, "pass": {"type": "boolean"}},
          "required": ["check", "pass"]
        }
      }
    },
    "required": ["suite", "q", "cells"]
  },
  "$defs": {
    "quadg": {
      "$comment": "a + b*g with g^2 = gsq; all three are exact num/den strings",
      "type": "object",
      "properties": {
        "a": {"type": "string"},
        "b": {"type": "string"},
        "gsq": {"type": "string"}
      },
      "required": ["a", "b", "gsq"]
    }
  }
}
)";
}

}  // namespace sl2char
