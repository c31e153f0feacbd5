#include <algorithm>

#include "pq/cli.hpp"

namespace pq::cli {

namespace {

std::string pointer_join(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

const json& field(const json& obj, const std::string& at, const char* key) {
  if (!obj.is_object())
    throw ValidationError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ValidationError(at, std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const json& v, const std::string& at) {
  if (!v.is_number_integer())
    throw ValidationError(at, "expected an integer");
  return v.get<long long>();
}

std::size_t positive(const json& v, const std::string& at) {
  long long x = integer(v, at);
  if (x <= 0)
    throw ValidationError(at, "must be positive");
  return static_cast<std::size_t>(x);
}

const json& array(const json& v, const std::string& at) {
  if (!v.is_array())
    throw ValidationError(at, "expected an array");
  return v;
}

std::vector<std::string> strings(const json& v, const std::string& at) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(v, at).size(); ++i) {
    if (!v[i].is_string())
      throw ValidationError(pointer_join(at, i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<Point>> permutations(const json& v, const std::string& at) {
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 0; i < array(v, at).size(); ++i) {
    std::string here = pointer_join(at, i);
    std::vector<Point> images;
    for (std::size_t k = 0; k < array(v[i], here).size(); ++k) {
      long long x = integer(v[i][k], pointer_join(here, k));
      if (x < 0)
        throw ValidationError(pointer_join(here, k), "negative point");
      images.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(images));
  }
  return out;
}

Permutation to_permutation(const std::vector<Point>& images, std::size_t degree,
                           const std::string& at) {
  if (images.size() != degree)
    throw ValidationError(at, "has " + std::to_string(images.size()) + " points, degree is " +
                                  std::to_string(degree));
  try {
    return Permutation(images);
  } catch (const DegreeMismatch&) {
    throw ValidationError(at, "is not a permutation");
  }
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }

  JobSpec job;
  if (!doc.is_object())
    throw ValidationError("", "the job must be a JSON object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != kJobSchema)
    throw ValidationError("/schema", std::string("expected \"") + kJobSchema + "\"");

  const json& group = field(doc, "", "group");
  job.degree = positive(field(group, "/group", "degree"), "/group/degree");
  job.generators = permutations(field(group, "/group", "generators"), "/group/generators");
  if (group.contains("names")) {
    job.names = strings(group["names"], "/group/names");
  } else {
    for (std::size_t k = 0; k < job.generators.size(); ++k)
      job.names.push_back("g" + std::to_string(k + 1));
  }

  const json& actions = array(field(doc, "", "actions"), "/actions");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    std::string at = pointer_join("/actions", i);
    ActionSpec a;
    if (actions[i].is_object() && actions[i].contains("projection") &&
        !actions[i]["projection"].is_null())
      a.projection = permutations(actions[i]["projection"], at + "/projection");
    const json& sig = field(actions[i], at, "signature");
    long long genus = integer(field(sig, at + "/signature", "genus"), at + "/signature/genus");
    if (genus < 0 || genus > 1000)
      throw ValidationError(at + "/signature/genus", "must lie in [0, 1000]");
    a.signature.genus = static_cast<int>(genus);
    const json& periods = array(field(sig, at + "/signature", "periods"), at + "/signature/periods");
    for (std::size_t j = 0; j < periods.size(); ++j) {
      std::string here = pointer_join(at + "/signature/periods", j);
      long long m = integer(periods[j], here);
      if (m < 2 || m > 1'000'000)
        throw ValidationError(here, "a period must lie in [2, 1000000]");
      a.signature.periods.push_back(static_cast<int>(m));
    }
    const json& vec = field(actions[i], at, "vector");
    std::string vat = at + "/vector";
    a.a = vec.contains("a") ? strings(vec["a"], vat + "/a") : std::vector<std::string>{};
    a.b = vec.contains("b") ? strings(vec["b"], vat + "/b") : std::vector<std::string>{};
    a.c = strings(field(vec, vat, "c"), vat + "/c");
    job.actions.push_back(std::move(a));
  }

  if (doc.contains("budgets")) {
    const json& b = doc["budgets"];
    if (!b.is_object())
      throw ValidationError("/budgets", "expected an object");
    if (b.contains("max_cosets"))
      job.budgets.max_cosets = positive(b["max_cosets"], "/budgets/max_cosets");
    if (b.contains("tietze_steps"))
      job.budgets.tietze_steps = positive(b["tietze_steps"], "/budgets/tietze_steps");
    if (b.contains("verify_index_bound"))
      job.budgets.index_bound = positive(b["verify_index_bound"], "/budgets/verify_index_bound");
  }
  if (doc.contains("outputs")) {
    auto outs = strings(doc["outputs"], "/outputs");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (!known_outputs().contains(outs[i]))
        throw ValidationError(pointer_join("/outputs", i), "unknown output \"" + outs[i] + "\"");
      job.outputs.insert(outs[i]);
    }
  } else {
    job.outputs = known_outputs();
  }

  build_job(job);
  return job;
}

void build_job(JobSpec& job) {
  if (job.names.size() != job.generators.size())
    throw ValidationError("/group/names", "need one name per generator");
  for (std::size_t k = 0; k < job.names.size(); ++k) {
    if (!is_valid_generator_name(job.names[k]))
      throw ValidationError(pointer_join("/group/names", k), "invalid name \"" + job.names[k] + "\"");
    for (std::size_t l = 0; l < k; ++l)
      if (job.names[l] == job.names[k])
        throw ValidationError(pointer_join("/group/names", k), "duplicate name \"" + job.names[k] + "\"");
  }
  if (job.actions.empty())
    throw ValidationError("/actions", "need at least one action");
  if (job.budgets.max_cosets == 0 || job.budgets.tietze_steps == 0 || job.budgets.index_bound == 0)
    throw ValidationError("/budgets", "budgets must be positive");

  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < job.generators.size(); ++k)
    gens.push_back(to_permutation(job.generators[k], job.degree, pointer_join("/group/generators", k)));
  try {
    job.group = group_from_generators(gens, job.degree);
  } catch (const OrderBoundExceeded& e) {
    throw ValidationError("/group", e.what());
  }
  const GroupPtr& g = job.group;
  Presentation words(job.names);

  job.curve_actions.clear();
  for (std::size_t i = 0; i < job.actions.size(); ++i) {
    const ActionSpec& spec = job.actions[i];
    std::string at = pointer_join("/actions", i);
    try {
      spec.signature.validate();
    } catch (const Error& e) {
      throw ValidationError(at + "/signature", e.what());
    }

    std::optional<GroupHom> p;
    if (!spec.projection) {
      std::vector<Element> img;
      for (std::size_t k = 0; k < g->num_generators(); ++k)
        img.push_back(g->generator(k));
      p = homomorphism_from_elements(g, g, img);
    } else {
      const auto& proj = *spec.projection;
      if (proj.size() != g->num_generators())
        throw ValidationError(at + "/projection", "need one image per generator of G");
      std::size_t degree = proj.empty() ? 1 : proj.front().size();
      std::vector<Permutation> images;
      for (std::size_t k = 0; k < proj.size(); ++k)
        images.push_back(to_permutation(proj[k], degree, pointer_join(at + "/projection", k)));
      GroupPtr h = group_from_generators(images, degree);
      try {
        p = homomorphism_from_images(g, h, images);
      } catch (const NotAHomomorphism& e) {
        throw ValidationError(at + "/projection", e.what());
      }
    }

    const Signature& s = spec.signature;
    const FiniteGroup& h = *p->target();
    auto image_of = [&](const std::vector<std::string>& list, const std::string& key,
                        std::size_t expected) {
      std::string here = at + "/vector/" + key;
      if (list.size() != expected)
        throw ValidationError(here, "expected " + std::to_string(expected) + " entries");
      std::vector<Element> out;
      for (std::size_t j = 0; j < list.size(); ++j) {
        Word w;
        try {
          w = words.parse(list[j]);
        } catch (const WordSyntaxError& e) {
          throw ValidationError(pointer_join(here, j), e.what());
        }
        out.push_back(evaluate_word(h, p->generator_images(), w));
      }
      return out;
    };
    GeneratingVector v{p->target(), s, image_of(spec.a, "a", static_cast<std::size_t>(s.genus)),
                       image_of(spec.b, "b", static_cast<std::size_t>(s.genus)),
                       image_of(spec.c, "c", s.periods.size())};
    auto check = validate_generating_vector(v);
    if (!check.ok)
      throw ValidationError(at + "/vector", check.violation);
    try {
      job.curve_actions.push_back(build_curve_action(g, *p, std::move(v)));
    } catch (const Error& e) {
      throw ValidationError(at, e.what());
    }
  }
}

json emit_job(const JobSpec& job) {
  json out;
  out["schema"] = kJobSchema;
  out["group"] = {{"degree", job.degree}, {"generators", job.generators}, {"names", job.names}};
  json actions = json::array();
  for (const auto& a : job.actions) {
    json x;
    x["projection"] = a.projection ? json(*a.projection) : json(nullptr);
    x["signature"] = {{"genus", a.signature.genus}, {"periods", a.signature.periods}};
    x["vector"] = {{"a", a.a}, {"b", a.b}, {"c", a.c}};
    actions.push_back(std::move(x));
  }
  out["actions"] = std::move(actions);
  out["budgets"] = {{"max_cosets", job.budgets.max_cosets},
                    {"tietze_steps", job.budgets.tietze_steps},
                    {"verify_index_bound", job.budgets.index_bound}};
  out["outputs"] = std::vector<std::string>(job.outputs.begin(), job.outputs.end());
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pq::cli
