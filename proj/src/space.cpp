// Copyright 2026 The lpgap Authors
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

#include "lpgap/space.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "lpgap/error.hpp"

namespace lpgap::space {

std::string_view derivation_name(StorageBound::Derivation d) {
  return d == StorageBound::Derivation::kSingleSolution ? "single-solution"
                                                        : "subset-of-solutions";
}

std::size_t ceil_log2(const BigInt& count) {
  if (count < 1) throw ValidationError("object count must be >= 1");
  if (count == 1) return 0;
  // For count >= 2, ceil(log2(count)) is the bit length of count - 1.
  const BigInt below = count - 1;
  return mpz_sizeinbase(below.get_mpz_t(), 2);
}

StorageBound min_symbols_single(const BigInt& k) {
  if (k < 1) throw ValidationError("solution count k must be >= 1, got " + k.get_str());
  StorageBound b;
  b.object_count = k;
  b.min_bits = ceil_log2(k);
  b.derivation = StorageBound::Derivation::kSingleSolution;
  return b;
}

StorageBound min_symbols_subset(const BigInt& universe, const BigInt& chosen) {
  if (universe < 1) throw ValidationError("universe size N must be >= 1");
  if (chosen < 0 || chosen > universe) {
    throw ValidationError("subset size m must lie in [0, N], got " + chosen.get_str());
  }
  if (!universe.fits_ulong_p()) throw ValidationError("universe size N too large");
  StorageBound b;
  mpz_bin_uiui(b.object_count.get_mpz_t(), universe.get_ui(), chosen.get_ui());
  b.min_bits = ceil_log2(b.object_count);
  b.derivation = StorageBound::Derivation::kSubsetOfSolutions;
  b.list_bits = chosen * BigInt(static_cast<unsigned long>(ceil_log2(universe)));
  return b;
}

std::vector<GrowthRow> subset_growth(std::size_t n_from, std::size_t n_to, std::size_t divisor) {
  if (divisor < 1) throw ValidationError("divisor d must be >= 1");
  if (n_from > n_to) throw ValidationError("growth range is empty");
  if (n_to > 24) throw ValidationError("growth table limited to n <= 24");
  std::vector<GrowthRow> rows;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    GrowthRow row;
    row.n = n;
    row.universe = BigInt(1) << static_cast<mp_bitcnt_t>(n);
    row.chosen = row.universe / BigInt(static_cast<unsigned long>(divisor));
    row.min_bits = min_symbols_subset(row.universe, row.chosen).min_bits;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  Mpfr(Mpfr&& o) noexcept : v_{} { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Non-integer samples are accurate to about 2^-(prec - x - 4); differences
// smaller than this are treated as ties.
constexpr long kTieExponent = -200;

}  // namespace

MonotoneDemo monotone_model_demo(const Rational& start, const Rational& end, const Rational& step) {
  if (step.sign() <= 0) throw ValidationError("step must be > 0");
  if (start > end) throw ValidationError("grid start must not exceed grid end");
  if (start < -64 || end > 64) throw ValidationError("grid must lie within [-64, 64]");
  const BigInt count = ((end - start) / step).floor() + 1;
  if (count > 100000) throw ValidationError("grid has more than 100000 points");

  const long max_x = std::max<long>(0, Rational(end.ceil()).num().get_si());
  const mpfr_prec_t prec = 256 + max_x;

  MonotoneDemo demo;
  std::vector<Mpfr> values;
  Mpfr pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  Rational x = start;
  for (BigInt i = 0; i < count; ++i, x += step) {
    SampledValue s;
    s.x = x;
    Mpfr f(prec);
    if (x.is_integer() && x.sign() >= 0) {
      // 2^x is an integer, so sin(2^x pi) is exactly zero.
      s.exact = true;
      mpfr_set_z(f.get(), x.num().get_mpz_t(), MPFR_RNDN);
    } else {
      Mpfr xv(prec);
      mpfr_set_q(xv.get(), x.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_exp2(f.get(), xv.get(), MPFR_RNDN);
      mpfr_mul(f.get(), f.get(), pi.get(), MPFR_RNDN);
      mpfr_sin(f.get(), f.get(), MPFR_RNDN);
      mpfr_add(f.get(), f.get(), xv.get(), MPFR_RNDN);
    }
    char* text = nullptr;
    mpfr_asprintf(&text, "%.30Rg", f.get());
    s.approx = text;
    mpfr_free_str(text);
    demo.samples.push_back(std::move(s));
    values.push_back(std::move(f));
  }

  Mpfr diff(prec);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    mpfr_sub(diff.get(), values[i].get(), values[i + 1].get(), MPFR_RNDN);
    if (mpfr_sgn(diff.get()) > 0 && mpfr_get_exp(diff.get()) > kTieExponent) {
      demo.grid_monotone = false;
      demo.witness = std::make_pair(demo.samples[i].x, demo.samples[i + 1].x);
      break;
    }
  }
  return demo;
}

}  // namespace lpgap::space
