// Copyright 2026 The qhc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qhc {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string escape_json(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string observable_to_json(const Observable& obs) {
  std::ostringstream out;
  out << "{\"n\": " << obs.sites() << ", \"terms\": [";
  bool first = true;
  for (const auto& [s, c] : obs.terms()) {
    if (!first) out << ", ";
    first = false;
    out << "{\"s\": [";
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) out << ", ";
      out << static_cast<int>(s[j]);
    }
    out << "], \"re\": " << format_double(c.real()) << ", \"im\": " << format_double(c.imag())
        << "}";
  }
  out << "]}";
  return out.str();
}

Observable observable_from_json(const std::string& text) {
  const json parsed = json::parse(text);
  const int n = parsed.at("n").get<int>();
  Observable out(n);
  for (const auto& term : parsed.at("terms")) {
    PauliIndex s;
    for (const auto& digit : term.at("s")) {
      s.push_back(static_cast<std::uint8_t>(digit.get<int>()));
    }
    if (static_cast<int>(s.size()) != n) {
      throw std::invalid_argument("observable JSON: digit list length != n");
    }
    out.add_coeff(s, Complex{term.at("re").get<double>(),
                             term.value("im", 0.0)});
  }
  return out;
}

Observable load_observable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open observable file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return observable_from_json(buffer.str());
}

void save_observable(const Observable& obs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write observable file: " + path);
  out << observable_to_json(obs) << "\n";
}

std::string dense_to_json(const DenseOperator& m) {
  std::ostringstream out;
  out << "{\"sites\": " << m.sites << ", \"entries\": [";
  for (std::int64_t r = 0; r < m.dim(); ++r) {
    for (std::int64_t c = 0; c < m.dim(); ++c) {
      if (r || c) out << ", ";
      out << "[" << format_double(m.mat(r, c).real()) << ", " << format_double(m.mat(r, c).imag())
          << "]";
    }
  }
  out << "]}";
  return out.str();
}

std::string record_to_jsonl(const CheckRecord& rec) {
  std::ostringstream out;
  out << "{\"check_id\": \"" << escape_json(rec.check_id) << "\"";
  out << ", \"instance_id\": \"" << escape_json(rec.instance_id) << "\"";
  out << ", \"params\": {";
  bool first = true;
  for (const auto& [k, v] : rec.params) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << escape_json(k) << "\": " << format_double(v);
  }
  out << "}";
  out << ", \"lhs\": " << format_double(rec.lhs);
  out << ", \"rhs\": " << format_double(rec.rhs);
  if (rec.ratio.has_value()) {
    out << ", \"ratio\": " << format_double(*rec.ratio);
  } else {
    out << ", \"ratio\": null";
  }
  out << ", \"status\": \"" << to_string(rec.status) << "\"";
  out << ", \"note\": \"" << escape_json(rec.note) << "\"}";
  return out.str();
}

EnsembleSpec ensemble_spec_from_json(const std::string& text) {
  const json parsed = json::parse(text);
  EnsembleSpec spec;
  spec.kind = parsed.at("kind").get<std::string>();
  spec.n = parsed.at("n").get<int>();
  spec.seed = parsed.value("seed", std::uint64_t{0});
  spec.count = parsed.value("count", 1);
  if (parsed.contains("params")) {
    for (const auto& [key, value] : parsed.at("params").items()) {
      if (key == "name") {
        spec.classical_name = value.get<std::string>();
      } else if (key == "s") {
        for (const auto& d : value) spec.digits.push_back(static_cast<std::uint8_t>(d.get<int>()));
      } else {
        spec.params[key] = value.get<double>();
      }
    }
  }
  return spec;
}

std::string ensemble_spec_to_json(const EnsembleSpec& spec) {
  std::ostringstream out;
  out << "{\"kind\": \"" << escape_json(spec.kind) << "\", \"n\": " << spec.n;
  out << ", \"seed\": " << spec.seed << ", \"count\": " << spec.count;
  out << ", \"params\": {";
  bool first = true;
  for (const auto& [k, v] : spec.params) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << escape_json(k) << "\": " << format_double(v);
  }
  if (!spec.classical_name.empty()) {
    if (!first) out << ", ";
    first = false;
    out << "\"name\": \"" << escape_json(spec.classical_name) << "\"";
  }
  if (!spec.digits.empty()) {
    if (!first) out << ", ";
    out << "\"s\": [";
    for (std::size_t j = 0; j < spec.digits.size(); ++j) {
      if (j) out << ", ";
      out << static_cast<int>(spec.digits[j]);
    }
    out << "]";
  }
  out << "}}";
  return out.str();
}

}  // namespace qhc
