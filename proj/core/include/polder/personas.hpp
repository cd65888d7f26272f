#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace polder {

struct Persona {
  std::string name;
  double probability = 0.0;
  std::string description_nl;
};

class InvalidTableError : public std::runtime_error {
 public:
  explicit InvalidTableError(const std::string& what)
      : std::runtime_error(what) {}
};

// Ordered persona list; probabilities must sum to 1 within 1e-12 and names
// must be unique.
struct PersonaTable {
  std::vector<Persona> personas;

  const Persona* find(std::string_view name) const;
  void validate() const;  // throws InvalidTableError
};

// The nine built-in user archetypes with their sampling probabilities.
const PersonaTable& builtin_table();

// Override table from a JSON file: [{"name","probability","description_nl"}].
PersonaTable load_persona_table(const std::filesystem::path& path);

// Uniform double in [0,1) from the top 53 bits; avoids
// std::uniform_real_distribution, whose mapping is implementation-defined.
double uniform_unit(std::mt19937_64& rng);

// Cumulative-probability inversion over the table order. Identical seeds
// give identical draw sequences on every platform.
const Persona& sample_persona(const PersonaTable& table, std::mt19937_64& rng);

}  // namespace polder
