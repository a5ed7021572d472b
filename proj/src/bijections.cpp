#include "invseq/bijections.hpp"

#include "invseq/error.hpp"

#include <algorithm>
#include <cassert>

namespace invseq {

// --- phi --------------------------------------------------------------------

namespace {

// One recursive step of phi: e_hat = phi(Q_hat), `step` = last step of Q.
std::vector<int> phi_extend(const std::vector<int>& e_hat, const LabeledStep& step) {
  const int p_hat = prmx(e_hat);
  const int m = max_value(e_hat) + step.a;
  std::vector<int> e;
  e.reserve(e_hat.size() + step.parts.size());
  if (step.is_rise()) {
    // Insert m right after e_hat[p_hat] (1-based).
    e.assign(e_hat.begin(), e_hat.begin() + p_hat);
    e.push_back(m);
    e.insert(e.end(), e_hat.begin() + p_hat, e_hat.end());
    return e;
  }
  // Insertion points j_1 = p_hat + b - 1, j_i = p_hat + b_i + ... + b_k.
  const auto k = step.parts.size();
  std::vector<int> after(k);
  int suffix = 0;
  for (std::size_t i = k; i-- > 1;) {
    suffix += step.parts[i];
    after[i] = p_hat + suffix;
  }
  after[0] = p_hat + suffix + step.parts[0] - 1;
  // Several equal j_i put that many copies of m at the same place.
  const auto copies_after = [&](int j) { return std::count(after.begin(), after.end(), j); };
  e.insert(e.end(), copies_after(0), m);
  for (std::size_t j = 1; j <= e_hat.size(); ++j) {
    e.push_back(e_hat[j - 1]);
    e.insert(e.end(), copies_after(static_cast<int>(j)), m);
  }
  if (e.size() != e_hat.size() + k) {
    throw std::logic_error("phi: insertion index outside the sequence for step " + step.label());
  }
  return e;
}

std::vector<int> phi_rec(const LabeledFPath& path) {
  if (path.empty()) return {0};
  return phi_extend(phi_rec(path.without_last()), path.steps().back());
}

LabeledFPath phi_inv_rec(const std::vector<int>& e) {
  if (e.size() == 1) return {};
  const int len = static_cast<int>(e.size());
  const int p = prmx(e);
  const int m = max_value(e);
  const auto entry = [&](int j) { return e[static_cast<std::size_t>(j - 1)]; };
  const int next = p < len ? entry(p + 1) : -1;  // sentinel e_{n+2} = -1
  // At p = 1 the left neighbour is treated as -infinity.
  const bool has_prev = p >= 2;

  if (has_prev && next < entry(p - 1)) {
    // Last step was a rise (a; 1): drop e_p.
    std::vector<int> e_hat(e.begin(), e.end());
    e_hat.erase(e_hat.begin() + (p - 1));
    const int a = m - max_value(e_hat);
    return phi_inv_rec(e_hat).with_step(rise(a));
  }

  // Last step was a down step: remove every entry equal to m.
  std::vector<int> idx;  // 1-based positions i_1 < ... < i_k of m
  std::vector<int> e_hat;
  for (int j = 1; j <= len; ++j) {
    if (entry(j) == m) {
      idx.push_back(j);
    } else {
      e_hat.push_back(entry(j));
    }
  }
  const int k = static_cast<int>(idx.size());
  const int p_hat = prmx(e_hat);
  std::vector<int> parts(static_cast<std::size_t>(k));
  if (k == 1) {
    parts[0] = p - p_hat;
  } else {
    parts[0] = idx[0] - idx[1] + 2;
    for (int j = 2; j <= k - 1; ++j) parts[j - 1] = idx[j - 1] - idx[j] + 1;
    parts[k - 1] = idx[k - 1] - k - p_hat;
  }
  const int a = m - max_value(e_hat);
  return phi_inv_rec(e_hat).with_step(down(a, std::move(parts)));
}

}  // namespace

InversionSequence phi(const LabeledFPath& path) { return InversionSequence(phi_rec(path)); }

LabeledFPath phi_inv(const InversionSequence& e) {
  if (contains_pattern(e, pattern_102())) {
    throw Error(ErrorKind::PatternViolation, "phi_inv: " + e.to_json() + " contains 102");
  }
  return phi_inv_rec(e.vec());
}

// --- psi --------------------------------------------------------------------

namespace {

// 1-based index of the r-th return of `word`; the 0-th return is index 0.
std::size_t return_index(const std::vector<int>& returns, int r) {
  if (r == 0) return 0;
  if (r < 0 || r > static_cast<int>(returns.size())) {
    throw std::logic_error("psi: requested return " + std::to_string(r) + " of " + std::to_string(returns.size()));
  }
  return static_cast<std::size_t>(returns[static_cast<std::size_t>(r - 1)]);
}

std::string psi_extend(const std::string& s_hat, const LabeledStep& step) {
  const auto returns = uvd_return_positions(s_hat);
  const int h_hat = static_cast<int>(returns.size()) - 1;  // vox(S_hat)
  const int a = step.a;

  if (step.is_rise()) {
    // S = alpha u beta d, cutting after the (h+1-a)-th return.
    const std::size_t p = return_index(returns, h_hat + 1 - a);
    return s_hat.substr(0, p) + "u" + s_hat.substr(p) + "d";
  }

  const auto& b = step.parts;
  const std::size_t k = b.size();
  // j_i = index of the (h + 1 + b_{i+1} + ... + b_k - a)-th return, i = 0..k.
  std::vector<std::size_t> j(k + 1);
  int suffix = 0;
  for (std::size_t i = k + 1; i-- > 0;) {
    j[i] = return_index(returns, h_hat + 1 + suffix - a);
    if (i > 0) suffix += b[i - 1];
  }
  // p: s_p != v, s_{p+1..j_0-1} all v, s_{j_0} = d.
  std::size_t p = j[0] - 1;
  while (p > 0 && s_hat[p - 1] == 'v') --p;

  const std::string alpha = s_hat.substr(0, p);
  const std::string beta = s_hat.substr(p, j[0] - p);
  std::string out = alpha;
  for (std::size_t i = 1; i <= k; ++i) out += "u" + s_hat.substr(j[i - 1], j[i] - j[i - 1]) + "u";
  out += s_hat.substr(j[k]);
  out.append(k, 'v');
  out += beta;
  return out;
}

std::string psi_rec(const LabeledFPath& path) {
  if (path.empty()) return "ud";
  return psi_extend(psi_rec(path.without_last()), path.steps().back());
}

std::vector<int> heights(std::string_view word) {
  std::vector<int> h{0};
  for (char c : word) h.push_back(h.back() + (c == 'u' ? 1 : c == 'd' ? -1 : -2));
  return h;
}

LabeledFPath psi_inv_rec(const std::string& s) {
  if (s == "ud") return {};
  const auto h = heights(s);
  const std::size_t len = s.size();

  if (s[len - 2] != 'v') {
    // S = alpha u beta d with alpha, beta (possibly empty) UVD paths.
    std::size_t cut = len - 1;
    while (h[cut] != 0) --cut;
    const std::string alpha = s.substr(0, cut);
    const std::string beta = s.substr(cut + 1, len - 2 - cut);
    return psi_inv_rec(alpha + beta).with_step(rise(uvd_block(beta)));
  }

  // S = alpha (u sigma_1 u) ... (u sigma_k u) tau v^k beta, beta = v^j d.
  // The trailing run has L = k + j vertical steps and tau ends at height 2L+1.
  int run = 0;
  std::size_t tau_end = len - 1;
  while (s[tau_end - 1] == 'v') {
    --tau_end;
    ++run;
  }
  const int tau_base = 2 * run + 1;
  std::size_t tau_begin = tau_end;
  while (h[tau_begin - 1] >= tau_base) --tau_begin;
  const std::string tau = s.substr(tau_begin, tau_end - tau_begin);

  // Peel blocks u sigma u right to left. A block must follow whenever the
  // step before the current cut is u and fewer than L blocks were taken,
  // since alpha cannot end in u when beta starts with v.
  std::vector<std::string> sigmas;
  std::size_t closing = tau_begin - 1;  // 0-based index of a closing u
  std::size_t alpha_end = 0;
  while (true) {
    assert(s[closing] == 'u');
    const int base = h[closing];
    std::size_t sigma_begin = closing;
    while (h[sigma_begin - 1] >= base) --sigma_begin;
    sigmas.push_back(s.substr(sigma_begin, closing - sigma_begin));
    const std::size_t opening = sigma_begin - 1;
    alpha_end = opening;
    if (static_cast<int>(sigmas.size()) == run || opening == 0 || s[opening - 1] != 'u') break;
    closing = opening - 1;
  }
  std::reverse(sigmas.begin(), sigmas.end());
  const int k = static_cast<int>(sigmas.size());

  std::string s_hat = s.substr(0, alpha_end);
  s_hat.append(static_cast<std::size_t>(run - k), 'v');
  s_hat += 'd';
  std::vector<int> parts;
  for (const auto& sigma : sigmas) {
    s_hat += sigma;
    parts.push_back(-uvd_block(sigma));
  }
  s_hat += tau;
  return psi_inv_rec(s_hat).with_step(down(uvd_block(tau), std::move(parts)));
}

}  // namespace

UvdPath psi(const LabeledFPath& path) { return UvdPath(psi_rec(path)); }

LabeledFPath psi_inv(const UvdPath& path) { return psi_inv_rec(path.word()); }

InversionSequence schroeder_to_is(const SchroederPath& path) { return phi(psi_inv(schroeder_to_uvd(path))); }

// --- (102, 012) tilings -------------------------------------------------------

Tiling::Tiling(std::string_view word) : word_(word) {
  for (char c : word_) {
    if (c != 'S' && c != 'D') throw Error(ErrorKind::ParseError, "tiling letters are S and D, got '" + word_ + "'");
  }
}

int Tiling::board_length() const noexcept {
  int len = 0;
  for (char c : word_) len += c == 'S' ? 1 : 2;
  return len;
}

Tiling is_to_tiling(const InversionSequence& e) {
  static const Pattern p012({0, 1, 2});
  if (contains_pattern(e, pattern_102()) || contains_pattern(e, p012)) {
    throw Error(ErrorKind::PatternViolation, "is_to_tiling: " + e.to_json() + " must avoid 102 and 012");
  }
  const int n = static_cast<int>(e.length());
  const int m = max_value(e.entries());
  if (m == 0) return Tiling(std::string(static_cast<std::size_t>(n - 1), 'D'));

  // Nonzero entries are weakly decreasing; b_j is the drop to the next one
  // and the last nonzero entry contributes e - 1.
  std::vector<int> nonzero;
  for (int v : e.entries()) {
    if (v != 0) nonzero.push_back(v);
  }
  std::string word;
  std::size_t next_nonzero = 0;
  for (int pos = m + 1; pos <= n; ++pos) {
    const int v = e.at(static_cast<std::size_t>(pos));
    if (v == 0) {
      word += 'D';
      continue;
    }
    const std::size_t j = next_nonzero++;
    const int drop = j + 1 < nonzero.size() ? nonzero[j] - nonzero[j + 1] : nonzero[j] - 1;
    word += 'S';
    word.append(static_cast<std::size_t>(drop), 'D');
    word += 'S';
  }
  return Tiling(word);
}

InversionSequence tiling_to_is(const Tiling& tiling, int n) {
  if (n < 1 || tiling.board_length() != 2 * n - 2) {
    throw Error(ErrorKind::BadBoardLength, "tiling '" + tiling.word() + "' has length " +
                                               std::to_string(tiling.board_length()) + ", expected " +
                                               std::to_string(2 * n - 2));
  }
  const auto& w = tiling.word();
  if (w.find('S') == std::string::npos) return InversionSequence(std::vector<int>(static_cast<std::size_t>(n), 0));

  // Tokens: a lone D is a zero entry; S D^b S is a nonzero entry.
  std::vector<int> drops;  // -1 marks a zero entry
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] == 'D') {
      drops.push_back(-1);
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == 'D') ++j;
    if (j == w.size()) throw Error(ErrorKind::BadBoardLength, "unpaired square in '" + w + "'");
    drops.push_back(static_cast<int>(j - i - 1));
    i = j + 1;
  }
  const int m = n - static_cast<int>(drops.size());
  std::vector<int> tail(drops.size(), 0);
  // Walking right to left, each nonzero entry is its successor plus its drop;
  // the last one is 1 + its drop.
  int value = 0;
  for (std::size_t i = drops.size(); i-- > 0;) {
    if (drops[i] < 0) continue;
    value = (value == 0 ? 1 : value) + drops[i];
    tail[i] = value;
  }
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e.insert(e.end(), tail.begin(), tail.end());
  return InversionSequence(std::move(e));
}

std::vector<Tiling> enumerate_tilings(int board_length) {
  std::vector<Tiling> out;
  std::string word;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(word);
      return;
    }
    if (remaining >= 2) {
      word.push_back('D');
      self(self, remaining - 2);
      word.pop_back();
    }
    word.push_back('S');
    self(self, remaining - 1);
    word.pop_back();
  };
  if (board_length >= 0) rec(rec, board_length);
  return out;
}

}  // namespace invseq
