#include "jgpt/descriptor.hpp"

#include <fstream>
#include <sstream>

namespace jgpt {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int label_index(const std::vector<std::string>& labels,
                const std::string& label) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw DescriptorError("unknown outcome label '" + label + "'");
}

}  // namespace

Algebra algebra_from_kind(const std::string& kind, int size) {
  if (kind == "real" || kind == "real_sym") return Algebra::real_sym(size);
  if (kind == "complex" || kind == "complex_herm")
    return Algebra::complex_herm(size);
  if (kind == "quaternionic" || kind == "quat_herm")
    return Algebra::quat_herm(size);
  if (kind == "spin" || kind == "spin_factor")
    return Algebra::spin_factor(size);
  throw DescriptorError("unknown algebra kind '" + kind + "'");
}

ModelDescriptor ModelDescriptor::from_json(const nlohmann::json& j) {
  ModelDescriptor d;
  if (!j.is_object()) throw DescriptorError("descriptor must be an object");
  d.schema_version = j.value("schema_version", 1);
  if (d.schema_version != 1)
    throw DescriptorError("unsupported schema_version");
  if (!j.contains("backend") || !j.at("backend").is_string())
    throw DescriptorError("descriptor needs a string 'backend'");
  d.backend = j.at("backend").get<std::string>();
  if (d.backend == "jordan") {
    if (!j.contains("kind") || !j.contains("size"))
      throw DescriptorError("jordan descriptor needs 'kind' and 'size'");
    d.kind = j.at("kind").get<std::string>();
    d.size = j.at("size").get<int>();
  } else if (d.backend == "classical") {
    if (!j.contains("outcomes"))
      throw DescriptorError("classical descriptor needs 'outcomes'");
    d.outcomes = j.at("outcomes").get<std::vector<std::string>>();
  } else if (d.backend == "polytopic") {
    for (const char* key : {"outcomes", "tests", "vertices"}) {
      if (!j.contains(key))
        throw DescriptorError(std::string("polytopic descriptor needs '") +
                              key + "'");
    }
    d.outcomes = j.at("outcomes").get<std::vector<std::string>>();
    d.tests = j.at("tests").get<std::vector<std::vector<std::string>>>();
    d.vertices = j.at("vertices").get<std::vector<std::vector<double>>>();
  } else {
    throw DescriptorError("unknown backend '" + d.backend + "'");
  }
  return d;
}

nlohmann::json ModelDescriptor::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["backend"] = backend;
  if (backend == "jordan") {
    j["kind"] = kind;
    j["size"] = size;
  } else if (backend == "classical") {
    j["outcomes"] = outcomes;
  } else {
    j["outcomes"] = outcomes;
    j["tests"] = tests;
    j["vertices"] = vertices;
  }
  return j;
}

ModelDescriptor parse_descriptor(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw DescriptorError("malformed JSON at line " + std::to_string(line) +
                              ", column " + std::to_string(col) + ": " +
                              e.what(),
                          line, col);
  }
  return ModelDescriptor::from_json(j);
}

ModelDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str());
}

Model build_model(const ModelDescriptor& d) {
  if (d.backend == "jordan")
    return Model::jordan(algebra_from_kind(d.kind, d.size));
  if (d.backend == "classical") return Model::classical(d.outcomes);
  if (d.backend == "polytopic") {
    PolytopicSpec spec;
    spec.outcome_labels = d.outcomes;
    for (const auto& t : d.tests) {
      std::vector<int> ids;
      ids.reserve(t.size());
      for (const auto& label : t) ids.push_back(label_index(d.outcomes, label));
      spec.tests.push_back(std::move(ids));
    }
    spec.vertices.resize(static_cast<int>(d.vertices.size()),
                         static_cast<int>(d.outcomes.size()));
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
      if (d.vertices[v].size() != d.outcomes.size())
        throw DescriptorError("vertex row has the wrong length");
      for (std::size_t x = 0; x < d.vertices[v].size(); ++x) {
        spec.vertices(static_cast<int>(v), static_cast<int>(x)) =
            d.vertices[v][x];
      }
    }
    return Model::polytopic(spec);
  }
  throw DescriptorError("unknown backend '" + d.backend + "'");
}

ModelDescriptor describe_model(const Model& m) {
  ModelDescriptor d;
  switch (m.backend()) {
    case Backend::Classical:
      d.backend = "classical";
      d.outcomes = m.outcome_labels();
      break;
    case Backend::Jordan: {
      d.backend = "jordan";
      const Algebra& alg = m.algebra();
      switch (alg.kind()) {
        case AlgebraKind::RealSym: d.kind = "real"; break;
        case AlgebraKind::ComplexHerm: d.kind = "complex"; break;
        case AlgebraKind::QuatHerm: d.kind = "quaternionic"; break;
        case AlgebraKind::SpinFactor: d.kind = "spin"; break;
        case AlgebraKind::DirectSum:
          throw DescriptorError("direct sums have no descriptor form");
      }
      d.size = alg.size();
      break;
    }
    case Backend::Polytopic: {
      d.backend = "polytopic";
      d.outcomes = m.outcome_labels();
      for (const auto& t : m.tests()) {
        std::vector<std::string> labels;
        labels.reserve(t.size());
        for (int x : t)
          labels.push_back(m.outcome_labels()[static_cast<std::size_t>(x)]);
        d.tests.push_back(std::move(labels));
      }
      const Eigen::MatrixXd& v = m.vertices();
      for (int r = 0; r < v.rows(); ++r) {
        std::vector<double> row(static_cast<std::size_t>(v.cols()));
        for (int c = 0; c < v.cols(); ++c)
          row[static_cast<std::size_t>(c)] = v(r, c);
        d.vertices.push_back(std::move(row));
      }
      break;
    }
  }
  return d;
}

}  // namespace jgpt
