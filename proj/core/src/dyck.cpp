#include "vlab/dyck.hpp"

#include <sstream>

#include "vlab/error.hpp"

namespace vlab {

namespace {

void dyck_words(std::string& prefix, std::size_t ups, std::size_t downs, std::size_t n,
                const std::function<void(const std::string&)>& visit) {
  if (downs == n) {
    visit(prefix);
    return;
  }
  if (ups < n) {
    prefix.push_back('U');
    dyck_words(prefix, ups + 1, downs, n, visit);
    prefix.pop_back();
  }
  if (downs < ups) {
    prefix.push_back('D');
    dyck_words(prefix, ups, downs + 1, n, visit);
    prefix.pop_back();
  }
}

std::vector<std::size_t> valleys_of(const std::string& steps) {
  std::vector<std::size_t> out;
  std::size_t downs = 0;
  for (std::size_t q = 0; q < steps.size(); ++q) {
    if (steps[q] != 'D') continue;
    ++downs;
    if (q + 1 < steps.size() && steps[q + 1] == 'U') out.push_back(downs);
  }
  return out;
}

std::size_t height_after(const std::string& steps, std::size_t i) {
  std::size_t height = 0, downs = 0;
  for (char s : steps) {
    if (s == 'U') {
      ++height;
    } else {
      --height;
      if (++downs == i) return height;
    }
  }
  throw DomainError("path has fewer than " + std::to_string(i) + " down steps");
}

}  // namespace

VMDyckPath::VMDyckPath(std::string steps, std::map<std::size_t, std::size_t> marks)
    : steps_(std::move(steps)), marks_(std::move(marks)) {
  long height = 0;
  for (char s : steps_) {
    if (s == 'U') {
      ++height;
    } else if (s == 'D') {
      if (--height < 0) throw DomainError("path dips below the axis");
    } else {
      throw DomainError(std::string("invalid step '") + s + "'");
    }
  }
  if (height != 0) throw DomainError("path does not end on the axis");
  const auto vs = valleys();
  for (std::size_t i : vs) {
    auto it = marks_.find(i);
    if (it == marks_.end()) throw DomainError("valley " + std::to_string(i) + " has no mark");
    const std::size_t bound = height_after_down(i) + 1;
    if (it->second < 1 || it->second > bound) {
      throw DomainError("mark " + std::to_string(it->second) + " at valley " + std::to_string(i) + " outside [1, " +
                        std::to_string(bound) + "]");
    }
  }
  if (marks_.size() != vs.size()) throw DomainError("mark given at a non-valley");
}

VMDyckPath VMDyckPath::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string steps;
  in >> steps;
  std::map<std::size_t, std::size_t> marks;
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(token);
      marks[std::stoul(token.substr(0, colon))] = std::stoul(token.substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("invalid mark '" + token + "', expected i:h");
    }
  }
  return VMDyckPath(std::move(steps), std::move(marks));
}

std::vector<std::size_t> VMDyckPath::valleys() const { return valleys_of(steps_); }

std::size_t VMDyckPath::height_after_down(std::size_t i) const { return height_after(steps_, i); }

std::string VMDyckPath::to_string() const {
  std::string out = steps_;
  for (const auto& [i, h] : marks_) out += ' ' + std::to_string(i) + ':' + std::to_string(h);
  return out;
}

void for_each_path(std::size_t n, const std::function<void(const VMDyckPath&)>& visit) {
  std::string prefix;
  dyck_words(prefix, 0, 0, n, [&visit](const std::string& word) {
    const auto vs = valleys_of(word);
    std::vector<std::size_t> bound;
    for (std::size_t i : vs) bound.push_back(height_after(word, i) + 1);
    std::map<std::size_t, std::size_t> marks;
    for (std::size_t i : vs) marks[i] = 1;
    for (;;) {
      visit(VMDyckPath(word, marks));
      std::size_t t = vs.size();
      while (t > 0) {
        --t;
        if (++marks[vs[t]] <= bound[t]) break;
        marks[vs[t]] = 1;
        if (t == 0) return;
      }
      if (vs.empty()) return;
    }
  });
}

std::vector<VMDyckPath> enumerate_paths(std::size_t n) {
  std::vector<VMDyckPath> out;
  for_each_path(n, [&out](const VMDyckPath& p) { out.push_back(p); });
  return out;
}

std::size_t first_ascent(const VMDyckPath& p) {
  const auto& s = p.steps();
  const auto stop = s.find('D');
  return stop == std::string::npos ? s.size() : stop;
}

TreeCode path_code(const VMDyckPath& p) {
  TreeCode code;
  code.a.assign(p.semilength(), 0);
  std::size_t downs = 0;
  for (char s : p.steps()) {
    if (s == 'D') {
      ++downs;
    } else if (downs < code.a.size()) {
      ++code.a[downs];
    }
  }
  for (const auto& [i, h] : p.marks()) code.h[i] = h;
  return code;
}

VMDyckPath path_from_code(const TreeCode& c) {
  validate_code(c);
  std::string steps;
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    steps.append(c.a[i], 'U');
    steps.push_back('D');
  }
  return VMDyckPath(std::move(steps), {c.h.begin(), c.h.end()});
}

IncOrderedTree path_to_tree(const VMDyckPath& p) { return tree_from_code(path_code(p)); }

VMDyckPath tree_to_path(const IncOrderedTree& t) {
  if (!has_increasing_leaves(t)) throw DomainError("tree_to_path: leaves are not increasing");
  return path_from_code(tree_code(t));
}

}  // namespace vlab
