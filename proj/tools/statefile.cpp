#include "statefile.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>

namespace entkit::cli {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

double parse_double(const char*& cursor, const char* line) {
  char* end = nullptr;
  const double value = std::strtod(cursor, &end);
  if (end == cursor) {
    throw CliError(kExitParseError,
                   std::string("bad amplitude literal in line: ") + line);
  }
  cursor = end;
  return value;
}

}  // namespace

Complex parse_amplitude(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) {
    throw CliError(kExitParseError, "empty amplitude");
  }
  const char* cursor = compact.c_str();
  const double first = parse_double(cursor, compact.c_str());

  if (*cursor == '\0') {
    return Complex{first, 0.0};
  }
  if (*cursor == 'i' && cursor[1] == '\0') {
    return Complex{0.0, first};
  }
  if (*cursor == '+' || *cursor == '-') {
    const double second = parse_double(cursor, compact.c_str());
    if (*cursor == 'i' && cursor[1] == '\0') {
      return Complex{first, second};
    }
  }
  throw CliError(kExitParseError,
                 "bad amplitude literal: '" + compact + "'");
}

ParsedStateFile parse_state_file(std::istream& in) {
  std::map<std::uint32_t, Complex> entries;
  int n_bits = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string compact = strip_spaces(line);
    if (compact.empty()) continue;

    const auto bar = compact.find('|');
    const auto ket = compact.find('>', bar == std::string::npos ? 0 : bar);
    if (bar == std::string::npos || ket == std::string::npos ||
        ket != compact.size() - 1 || bar == 0) {
      throw CliError(kExitParseError,
                     "line " + std::to_string(line_no) +
                         ": expected '<amplitude> |<bits>>'");
    }
    const std::string bits = compact.substr(bar + 1, ket - bar - 1);
    if (bits.empty()) {
      throw CliError(kExitParseError,
                     "line " + std::to_string(line_no) + ": empty bitstring");
    }
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw CliError(kExitParseError,
                       "line " + std::to_string(line_no) +
                           ": bitstring must be over {0,1}, got '" + bits +
                           "'");
      }
    }
    if (n_bits == -1) {
      n_bits = static_cast<int>(bits.size());
      if (n_bits > 12) {
        throw CliError(kExitParseError,
                       "line " + std::to_string(line_no) +
                           ": more than 12 qubits is unsupported");
      }
    } else if (static_cast<int>(bits.size()) != n_bits) {
      throw CliError(kExitParseError,
                     "line " + std::to_string(line_no) +
                         ": bitstring length differs from earlier lines");
    }

    std::uint32_t index = 0;
    for (char c : bits) index = (index << 1) | static_cast<std::uint32_t>(c - '0');

    const Complex amp = parse_amplitude(compact.substr(0, bar));
    if (!entries.emplace(index, amp).second) {
      throw CliError(kExitParseError, "line " + std::to_string(line_no) +
                                          ": duplicate bitstring |" + bits +
                                          ">");
    }
  }
  if (n_bits == -1) {
    throw CliError(kExitParseError, "state file holds no amplitudes");
  }

  ParsedStateFile parsed;
  parsed.n_qubits = n_bits;
  parsed.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_bits);
  for (const auto& [index, amp] : entries) {
    parsed.amplitudes(index) = amp;
  }
  parsed.norm_squared = parsed.amplitudes.squaredNorm();
  return parsed;
}

PureState state_from_file(std::istream& in, bool normalize) {
  ParsedStateFile parsed = parse_state_file(in);
  if (parsed.norm_squared < 1e-24) {
    throw CliError(kExitNormalizationError, "state file amplitudes are zero");
  }
  if (!normalize && std::abs(parsed.norm_squared - 1.0) > 1e-6) {
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer),
                  "amplitudes have |psi|^2 = %.9g; pass --normalize to rescale",
                  parsed.norm_squared);
    throw CliError(kExitNormalizationError, buffer);
  }
  return PureState::normalized(parsed.n_qubits, std::move(parsed.amplitudes));
}

std::string format_amplitude(const Complex& value) {
  char buffer[96];
  if (value.imag() == 0.0) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", value.real());
  } else if (value.real() == 0.0) {
    std::snprintf(buffer, sizeof(buffer), "%.17gi", value.imag());
  } else {
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", value.real(),
                  value.imag());
  }
  return buffer;
}

std::string write_state_file(const PureState& state) {
  std::ostringstream out;
  out << "# " << state.n_qubits() << "-qubit state\n";
  const int n = state.n_qubits();
  for (std::uint32_t index = 0;
       index < static_cast<std::uint32_t>(state.dim()); ++index) {
    const Complex amp = state.amplitude(index);
    if (std::abs(amp) == 0.0) continue;
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      bits[static_cast<std::size_t>(i)] =
          static_cast<char>('0' + ((index >> (n - 1 - i)) & 1u));
    }
    out << format_amplitude(amp) << " |" << bits << ">\n";
  }
  return out.str();
}

}  // namespace entkit::cli
