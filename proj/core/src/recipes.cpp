#include "polder/recipes.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace polder {

namespace {

constexpr std::string_view kSftDocument =
    R"DOC(# Model arguments
model_name_or_path: Rijgersberg/GEITje-7B
model_revision: main
torch_dtype: bfloat16
use_flash_attention_2: true

# Data training arguments
# Zephyr chat template
chat_template: "{% for message in messages %}\n{% if message['role'] == 'user' %}\n{{ '<|user|>\n' + message['content'] + eos_token }}\n{% elif message['role'] == 'system' %}\n{{ '<|system|>\n' + message['content'] + eos_token }}\n{% elif message['role'] == 'assistant' %}\n{{ '<|assistant|>\n'  + message['content'] + eos_token }}\n{% endif %}\n{% if loop.last and add_generation_prompt %}\n{{ '<|assistant|>' }}\n{% endif %}\n{% endfor %}"
dataset_mixer:
  BramVanroy/ultrachat_200k_dutch: 1.0
  BramVanroy/stackoverflow-chat-dutch: 0.5
  BramVanroy/alpaca-cleaned-dutch: 1.0
  BramVanroy/dolly-15k-dutch: 1.0
  BramVanroy/no_robots_dutch: 1.0
dataset_splits:
- train_sft
- test_sft
preprocessing_num_workers: 8

# SFT trainer config
bf16: true
do_eval: true
evaluation_strategy: epoch
gradient_accumulation_steps: 1
gradient_checkpointing: true
gradient_checkpointing_kwargs:
  use_reentrant: False
hub_model_id: GEITje-ultra-sft
hub_strategy: every_save
learning_rate: 2.0e-05
log_level: info
logging_steps: 5
logging_strategy: steps
lr_scheduler_type: cosine
max_seq_length: 8192
max_steps: -1
num_train_epochs: 1
output_dir: data/GEITje-ultra-sft
overwrite_output_dir: true
per_device_eval_batch_size: 8
per_device_train_batch_size: 16
push_to_hub: true
remove_unused_columns: true
report_to:
- wandb
save_strategy: "steps"
save_steps: 100
save_total_limit: 1
seed: 42
warmup_ratio: 0.1
)DOC";

constexpr std::string_view kDpoDocument =
    R"DOC(# Model arguments
model_name_or_path: BramVanroy/GEITje-7B-ultra-sft
model_revision: main
torch_dtype: bfloat16
use_flash_attention_2: true

# Data training arguments
dataset_mixer:
  BramVanroy/ultra_feedback_dutch: 1.0
dataset_splits:
- train_prefs
- test_prefs
preprocessing_num_workers: 8

# DPOTrainer arguments
bf16: true
beta: 0.1
do_eval: true
evaluation_strategy: steps
eval_steps: 100
gradient_accumulation_steps: 4
gradient_checkpointing: true
gradient_checkpointing_kwargs:
  use_reentrant: False
hub_model_id: BramVanroy/GEITje-ultra
learning_rate: 5.0e-7
log_level: info
logging_steps: 10
lr_scheduler_type: cosine
max_length: 2048
max_prompt_length: 1536
num_train_epochs: 1
optim: adamw_torch
output_dir: data/GEITje-ultra
per_device_train_batch_size: 4
per_device_eval_batch_size: 4
push_to_hub: true
save_strategy: "steps"
save_steps: 100
save_total_limit: 3
seed: 42
warmup_ratio: 0.1
)DOC";

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool is_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      switch (s[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default:
          out += '\\';
          out += s[i];
      }
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

Json parse_scalar(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  s = s.substr(b);

  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return Json(unescape(s.substr(1, s.size() - 2)));
  }
  if (s == "true" || s == "True") return Json(true);
  if (s == "false" || s == "False") return Json(false);
  if (is_integer(s)) {
    try {
      return Json(std::stoll(s));
    } catch (const std::out_of_range&) {
      // fall through to the floating-point reading
    }
  }
  double d = 0.0;
  if (is_number(s, d)) return Json(d);
  return Json(s);
}

std::string write_scalar(const Json& value) {
  if (value.is_string()) {
    const std::string& s = value.get_ref<const std::string&>();
    const bool needs_quotes =
        s.empty() || s.find('\n') != std::string::npos ||
        s.find('"') != std::string::npos || s.find(": ") != std::string::npos ||
        s.front() == ' ' || s.back() == ' ' || s.front() == '#';
    if (needs_quotes) return '"' + escape(s) + '"';
    return s;
  }
  return value.dump();
}

RecipeKind infer_kind(const Json& parameters) {
  if (parameters.contains("beta")) {
    return RecipeKind::Dpo;
  }
  return RecipeKind::Sft;
}

void validate_recipe(const TrainingRecipe& r) {
  if (r.kind == RecipeKind::Dpo && !r.parameters.contains("beta")) {
    throw RecipeParseError("dpo recipe must carry beta");
  }
  if (r.kind == RecipeKind::Sft && !r.parameters.contains("max_seq_length")) {
    throw RecipeParseError("sft recipe must carry max_seq_length");
  }
}

}  // namespace

std::string recipe_document(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::Sft: return std::string(kSftDocument);
    case RecipeKind::Dpo: return std::string(kDpoDocument);
  }
  throw UnknownKindError("unknown recipe kind");
}

TrainingRecipe training_recipe(RecipeKind kind) {
  TrainingRecipe r = parse_recipe_document(recipe_document(kind));
  if (r.kind != kind) {
    throw RecipeParseError("frozen document does not match requested kind");
  }
  return r;
}

EmittedRecipe emit_training_recipe(RecipeKind kind) {
  return {training_recipe(kind), recipe_document(kind)};
}

TrainingRecipe parse_recipe_document(const std::string& document) {
  std::istringstream in(document);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }

  TrainingRecipe recipe;
  recipe.parameters = Json::object();
  std::string open_key;  // top-level key awaiting a nested block

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& l = lines[i];
    if (l.empty()) continue;
    std::size_t first = l.find_first_not_of(' ');
    if (first == std::string::npos || l[first] == '#') continue;

    if (first >= 2 && !open_key.empty()) {
      // nested map entry "  key: value"
      const std::string body = l.substr(first);
      const std::size_t colon = body.find(':');
      if (colon == std::string::npos) {
        throw RecipeParseError("bad nested entry: " + l);
      }
      recipe.parameters[open_key][body.substr(0, colon)] =
          parse_scalar(body.substr(colon + 1));
      continue;
    }
    if (l[0] == '-') {
      if (open_key.empty()) throw RecipeParseError("orphan list item: " + l);
      if (!recipe.parameters[open_key].is_array()) {
        recipe.parameters[open_key] = Json::array();
      }
      recipe.parameters[open_key].push_back(parse_scalar(l.substr(1)));
      continue;
    }

    const std::size_t colon = l.find(':');
    if (colon == std::string::npos) {
      throw RecipeParseError("expected key: value, got: " + l);
    }
    const std::string key = l.substr(0, colon);
    const std::string rest = l.substr(colon + 1);
    if (rest.find_first_not_of(" \t") == std::string::npos) {
      open_key = key;
      recipe.parameters[key] = Json::object();
    } else {
      open_key.clear();
      recipe.parameters[key] = parse_scalar(rest);
    }
  }

  recipe.kind = infer_kind(recipe.parameters);
  validate_recipe(recipe);
  return recipe;
}

std::string write_recipe_document(const TrainingRecipe& recipe) {
  std::ostringstream out;
  for (const auto& [key, value] : recipe.parameters.items()) {
    if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [sub, sub_value] : value.items()) {
        out << "  " << sub << ": " << write_scalar(sub_value) << "\n";
      }
    } else if (value.is_array()) {
      out << key << ":\n";
      for (const Json& item : value) {
        out << "- " << write_scalar(item) << "\n";
      }
    } else {
      out << key << ": " << write_scalar(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace polder
