#include "groupkit/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groupkit {

namespace {

void append_u32(std::string &out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::uint32_t det_mod_p(std::uint32_t d, std::uint32_t p,
                        std::vector<std::uint32_t> m) {
  // Gaussian elimination; entries stay reduced mod p.
  std::uint64_t det = 1;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && m[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < d; ++j)
        std::swap(m[pivot * d + j], m[col * d + j]);
      det = (det * (p - 1)) % p;
    }
    std::uint64_t lead = m[col * d + col];
    det = (det * lead) % p;
    // normalize row to make elimination simple: multiply by lead^-1
    std::uint64_t inv = 1, base = lead, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    for (std::uint32_t j = col; j < d; ++j)
      m[col * d + j] = static_cast<std::uint32_t>((m[col * d + j] * inv) % p);
    for (std::uint32_t row = col + 1; row < d; ++row) {
      std::uint64_t f = m[row * d + col];
      if (f == 0) continue;
      for (std::uint32_t j = col; j < d; ++j) {
        std::uint64_t sub = (f * m[col * d + j]) % p;
        m[row * d + j] =
            static_cast<std::uint32_t>((m[row * d + j] + p - sub) % p);
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n; // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

GroupElement GroupElement::permutation(
    const std::vector<std::uint32_t> &images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  if (n == 0)
    throw InvalidElementError("permutation must have degree at least 1");
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> zero_based(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (images[i] < 1 || images[i] > n)
      throw InvalidElementError("permutation image " +
                                std::to_string(images[i]) +
                                " out of range 1.." + std::to_string(n));
    if (seen[images[i] - 1])
      throw InvalidElementError("permutation images are not a bijection: " +
                                std::to_string(images[i]) + " repeats");
    seen[images[i] - 1] = true;
    zero_based[i] = images[i] - 1;
  }
  return GroupElement(Kind::Permutation, n, 0, std::move(zero_based));
}

GroupElement GroupElement::identity_permutation(std::uint32_t degree) {
  if (degree == 0)
    throw InvalidElementError("permutation must have degree at least 1");
  std::vector<std::uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0u);
  return GroupElement(Kind::Permutation, degree, 0, std::move(v));
}

GroupElement GroupElement::matrix(std::uint32_t dimension,
                                  std::uint32_t modulus,
                                  const std::vector<std::uint32_t> &entries) {
  if (dimension == 0)
    throw InvalidElementError("matrix dimension must be at least 1");
  if (modulus >= (1u << 30) || !is_prime(modulus))
    throw InvalidElementError("matrix modulus " + std::to_string(modulus) +
                              " is not a (supported) prime");
  if (entries.size() != static_cast<std::size_t>(dimension) * dimension)
    throw InvalidElementError("matrix entry count " +
                              std::to_string(entries.size()) +
                              " does not match dimension " +
                              std::to_string(dimension));
  for (auto e : entries)
    if (e >= modulus)
      throw InvalidElementError("matrix entry " + std::to_string(e) +
                                " not reduced mod " + std::to_string(modulus));
  if (det_mod_p(dimension, modulus, entries) == 0)
    throw InvalidElementError("matrix is singular mod " +
                              std::to_string(modulus));
  return GroupElement(Kind::Matrix, dimension, modulus, entries);
}

GroupElement GroupElement::identity_matrix(std::uint32_t dimension,
                                           std::uint32_t modulus) {
  if (dimension == 0)
    throw InvalidElementError("matrix dimension must be at least 1");
  if (modulus >= (1u << 30) || !is_prime(modulus))
    throw InvalidElementError("matrix modulus " + std::to_string(modulus) +
                              " is not a (supported) prime");
  std::vector<std::uint32_t> v(static_cast<std::size_t>(dimension) * dimension,
                               0);
  for (std::uint32_t i = 0; i < dimension; ++i) v[i * dimension + i] = 1;
  return GroupElement(Kind::Matrix, dimension, modulus, std::move(v));
}

bool GroupElement::is_identity() const {
  if (is_permutation()) {
    for (std::uint32_t i = 0; i < n_; ++i)
      if (data_[i] != i) return false;
    return true;
  }
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      if (data_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

bool GroupElement::compatible_with(const GroupElement &other) const {
  return kind_ == other.kind_ && n_ == other.n_ && mod_ == other.mod_;
}

GroupElement GroupElement::operator*(const GroupElement &rhs) const {
  if (!compatible_with(rhs))
    throw IncompatibleElementsError(
        "cannot multiply elements of different kind or parameters");
  std::vector<std::uint32_t> out(data_.size());
  if (is_permutation()) {
    for (std::uint32_t i = 0; i < n_; ++i) out[i] = rhs.data_[data_[i]];
  } else {
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint64_t acc = 0;
        for (std::uint32_t k = 0; k < n_; ++k)
          acc += static_cast<std::uint64_t>(data_[i * n_ + k]) *
                 rhs.data_[k * n_ + j];
        out[i * n_ + j] = static_cast<std::uint32_t>(acc % mod_);
      }
    }
  }
  return GroupElement(kind_, n_, mod_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint32_t> out(data_.size());
  if (is_permutation()) {
    for (std::uint32_t i = 0; i < n_; ++i) out[data_[i]] = i;
    return GroupElement(kind_, n_, 0, std::move(out));
  }
  // Gauss-Jordan on [M | I] mod p.
  const std::uint32_t d = n_;
  const std::uint64_t p = mod_;
  std::vector<std::uint64_t> a(d * 2 * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) a[i * 2 * d + j] = data_[i * d + j];
    a[i * 2 * d + d + i] = 1;
  }
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && a[pivot * 2 * d + col] == 0) ++pivot;
    if (pivot == d)
      throw InvalidElementError("matrix is singular mod " +
                                std::to_string(mod_));
    if (pivot != col)
      for (std::uint32_t j = 0; j < 2 * d; ++j)
        std::swap(a[pivot * 2 * d + j], a[col * 2 * d + j]);
    std::uint64_t inv = pow_mod(a[col * 2 * d + col], p - 2);
    for (std::uint32_t j = 0; j < 2 * d; ++j)
      a[col * 2 * d + j] = a[col * 2 * d + j] * inv % p;
    for (std::uint32_t row = 0; row < d; ++row) {
      if (row == col) continue;
      std::uint64_t f = a[row * 2 * d + col];
      if (f == 0) continue;
      for (std::uint32_t j = 0; j < 2 * d; ++j) {
        std::uint64_t sub = f * a[col * 2 * d + j] % p;
        a[row * 2 * d + j] = (a[row * 2 * d + j] + p - sub) % p;
      }
    }
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      out[i * d + j] = static_cast<std::uint32_t>(a[i * 2 * d + d + j]);
  return GroupElement(kind_, n_, mod_, std::move(out));
}

std::uint64_t GroupElement::order() const {
  std::uint64_t k = 1;
  GroupElement acc = *this;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++k;
  }
  return k;
}

GroupElement GroupElement::power(std::uint64_t e) const {
  GroupElement result = is_permutation() ? identity_permutation(n_)
                                         : identity_matrix(n_, mod_);
  GroupElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string GroupElement::key() const {
  std::string out;
  out.reserve(1 + 8 + 4 * data_.size());
  out.push_back(static_cast<char>(kind_));
  append_u32(out, n_);
  if (is_matrix()) append_u32(out, mod_);
  for (auto v : data_) append_u32(out, is_permutation() ? v + 1 : v);
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (is_permutation()) {
    std::vector<bool> done(n_, false);
    bool any = false;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (done[i] || data_[i] == i) continue;
      any = true;
      os << '(' << i + 1;
      done[i] = true;
      for (std::uint32_t j = data_[i]; j != i; j = data_[j]) {
        os << ' ' << j + 1;
        done[j] = true;
      }
      os << ')';
    }
    if (!any) os << "()";
  } else {
    os << '[';
    for (std::uint32_t i = 0; i < n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::uint32_t j = 0; j < n_; ++j)
        os << (j ? "," : "") << data_[i * n_ + j];
      os << ']';
    }
    os << "] mod " << mod_;
  }
  return os.str();
}

} // namespace groupkit
