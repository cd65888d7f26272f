#include "polder/personas.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "polder/jsonl.hpp"

namespace polder {

const Persona* PersonaTable::find(std::string_view name) const {
  for (const Persona& p : personas) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void PersonaTable::validate() const {
  if (personas.empty()) throw InvalidTableError("persona table is empty");
  double sum = 0.0;
  std::set<std::string> names;
  for (const Persona& p : personas) {
    if (p.probability <= 0.0) {
      throw InvalidTableError("persona " + p.name + ": probability <= 0");
    }
    if (p.description_nl.empty()) {
      throw InvalidTableError("persona " + p.name + ": empty description");
    }
    if (!names.insert(p.name).second) {
      throw InvalidTableError("duplicate persona name: " + p.name);
    }
    sum += p.probability;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidTableError("persona probabilities sum to " +
                            std::to_string(sum) + ", expected 1.0");
  }
}

const PersonaTable& builtin_table() {
  static const PersonaTable table = [] {
    PersonaTable t;
    t.personas = {
        {"taalleerder", 0.01,
         "Deze persoon spreekt niet goed Nederlands en gebruikt geen "
         "moeilijke woorden of ingewikkelde zinsconstructies. Af en toe "
         "schrijft de persoon fouten, maar niet altijd."},
        {"direct", 0.1,
         "Een direct persoon die kortdadige taal hanteert. De gebruiker "
         "stelt specifieke, doelgerichte vragen in bondige en soms zelfs "
         "droge taal. De persoon verkiest een korte, duidelijke uitleg "
         "boven een lange, gedetailleerde uitleg."},
        {"detailliefhebber", 0.1,
         "Een geduldig persoon die diepgaande vragen stelt en "
         "gedetailleerde antwoorden verwacht."},
        {"kritisch", 0.03,
         "Een kritisch persoon die alles in vraag stelt en vaak moeilijk "
         "te overtuigen is."},
        {"kind", 0.01,
         "Een jong persoon tussen 6 en 12 jaar oud die nog vele zaken niet "
         "kent en dus vragen stelt die voor ouderen misschien "
         "vanzelfsprekend zijn. Ook kan het zijn dat de persoon nog niet "
         "erg goed kan lezen en schrijven en dus zal de persoon zelf geen "
         "moeilijk taal gebruiken en soms om verduidelijking vragen."},
        {"expert", 0.15,
         "Een ervaren expert die erg goed op de hoogte is van het "
         "onderwerp en dus ook diepgaande, bijna encyclopedische of "
         "academische, vragen stelt om wellicht een vak-specifiek probleem "
         "op te lossen."},
        {"lachebek", 0.01,
         "Een persoon die graag lacht en grapjes maakt en in luchtige taal "
         "communiceert. De persoon gebruikt soms (maar niet altijd) "
         "smileys en andere emoticons om zijn/haar gevoelens te uiten. De "
         "persoon is voornamelijk geïnteresseerd in wonderbaarlijke "
         "en fantastische zaken en springt al eens van de hak op de tak."},
        {"generalist", 0.15,
         "Een persoon die graag over veel verschillende onderwerpen praat "
         "en dus ook veel uiteenlopende vragen stelt. De persoon is niet "
         "erg geïnteresseerd in de details van een onderwerp, maar "
         "eerder in de grote lijnen."},
        {"gemiddeld", 0.44,
         "Een gemiddelde, normale gebruiker die geen bijzonder eisen stelt "
         "of noden heeft maar simpelweg een behulpzame assistent "
         "verwacht."},
    };
    t.validate();
    return t;
  }();
  return table;
}

PersonaTable load_persona_table(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidTableError(std::string("persona table parse: ") + e.what());
  }
  PersonaTable t;
  for (const Json& e : j) {
    Persona p;
    p.name = e.at("name").get<std::string>();
    p.probability = e.at("probability").get<double>();
    p.description_nl = e.at("description_nl").get<std::string>();
    t.personas.push_back(std::move(p));
  }
  t.validate();
  return t;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const Persona& sample_persona(const PersonaTable& table, std::mt19937_64& rng) {
  // Cheap per-draw guard; the full structural check lives in validate().
  double sum = 0.0;
  for (const Persona& p : table.personas) sum += p.probability;
  if (table.personas.empty() || std::abs(sum - 1.0) > 1e-12) {
    throw InvalidTableError("persona probabilities sum to " +
                            std::to_string(sum) + ", expected 1.0");
  }
  const double u = uniform_unit(rng);
  double cumulative = 0.0;
  for (const Persona& p : table.personas) {
    cumulative += p.probability;
    if (u < cumulative) return p;
  }
  return table.personas.back();
}

}  // namespace polder
