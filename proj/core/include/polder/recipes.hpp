#pragma once

#include <stdexcept>
#include <string>

#include "polder/jsonl.hpp"

namespace polder {

enum class RecipeKind { Sft, Dpo };

class UnknownKindError : public std::runtime_error {
 public:
  explicit UnknownKindError(const std::string& what)
      : std::runtime_error(what) {}
};

class RecipeParseError : public std::runtime_error {
 public:
  explicit RecipeParseError(const std::string& what)
      : std::runtime_error(what) {}
};

// Training configuration as data. Nothing here trains anything; the
// documents are emitted so downstream training runs are reproducible.
struct TrainingRecipe {
  RecipeKind kind = RecipeKind::Sft;
  Json parameters;  // ordered key -> scalar | map | list

  bool operator==(const TrainingRecipe&) const = default;
};

struct EmittedRecipe {
  TrainingRecipe recipe;
  std::string document;
};

// The frozen canonical documents (key-value layout with 2-space nested
// maps and dash lists). kind "sft" pins learning_rate 2.0e-05,
// max_seq_length 8192 and the dataset mixer; "dpo" pins beta 0.1,
// learning_rate 5.0e-7, max_length 2048, max_prompt_length 1536.
std::string recipe_document(RecipeKind kind);

TrainingRecipe training_recipe(RecipeKind kind);

EmittedRecipe emit_training_recipe(RecipeKind kind);

// Parses a recipe document back to an equal TrainingRecipe. The kind is
// inferred from the parameter set (beta present => dpo) and validated:
// dpo requires beta, sft requires max_seq_length.
TrainingRecipe parse_recipe_document(const std::string& document);

std::string write_recipe_document(const TrainingRecipe& recipe);

}  // namespace polder
