#include "subcube/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace subcube {

using nlohmann::json;

DistributionSpec load_spec_json(const std::string& text) {
  const json doc = json::parse(text);
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "explicit") {
    const int n = doc.at("n").get<int>();
    return DistributionSpec::make_explicit(n, doc.at("pmf").get<std::vector<double>>());
  }
  if (kind == "product") {
    return DistributionSpec::make_product(doc.at("bias").get<std::vector<double>>());
  }
  if (kind == "junta") {
    const int n = doc.at("n").get<int>();
    std::vector<int> vars = doc.at("vars").get<std::vector<int>>();
    for (int& v : vars) --v;  // JSON carries 1-based coordinates
    return DistributionSpec::make_junta(n, std::move(vars),
                                        doc.at("innerPmf").get<std::vector<double>>());
  }
  throw std::invalid_argument("load_spec_json: unknown kind '" + kind + "'");
}

DistributionSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_spec_file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_json(buf.str());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string spec_to_json(const DistributionSpec& spec) {
  json doc;
  switch (spec.kind()) {
    case DistributionSpec::Kind::Explicit: {
      doc["kind"] = "explicit";
      doc["n"] = spec.as_explicit().n;
      doc["pmf"] = spec.as_explicit().pmf;
      break;
    }
    case DistributionSpec::Kind::Product: {
      doc["kind"] = "product";
      doc["bias"] = spec.as_product().bias;
      break;
    }
    case DistributionSpec::Kind::Junta: {
      doc["kind"] = "junta";
      doc["n"] = spec.as_junta().n;
      std::vector<int> vars = spec.as_junta().vars;
      for (int& v : vars) ++v;
      doc["vars"] = vars;
      doc["innerPmf"] = spec.as_junta().inner_pmf;
      break;
    }
  }
  return doc.dump();
}

void save_spec_file(const DistributionSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_spec_file: cannot open " + path);
  out << spec_to_json(spec) << "\n";
}

}  // namespace subcube
