#include <array>
#include <sstream>
#include <string>
#include <string_view>

#include "polder/gateway.hpp"
#include "polder/text.hpp"

namespace polder {

namespace {

// Clean Dutch sentence banks. These must stay free of the default filter
// vocabulary (no apologies, model-name mentions, cutoff phrases, or
// non-Latin characters) so that mock pipelines drop records only where a
// drop was deliberately injected.
constexpr std::array<std::string_view, 14> kTopics = {
    "fotosynthese",
    "het klimaat in de Lage Landen",
    "de geschiedenis van de boekdrukkunst",
    "windmolens en energieopslag",
    "het menselijk geheugen",
    "de fietscultuur in Nederland",
    "sterrenkunde voor beginners",
    "gezonde voeding",
    "de werking van zonnepanelen",
    "muziektheorie",
    "het openbaar vervoer",
    "de Nederlandse schilderkunst",
    "programmeren in Python",
    "de waterhuishouding van polders",
};

constexpr std::array<std::string_view, 5> kOpeners = {
    "Kan je me meer vertellen over {t}?",
    "Ik wil graag weten hoe {t} precies werkt.",
    "Leg eens uit wat {t} inhoudt, alsjeblieft.",
    "Wat moet ik weten over {t} voordat ik eraan begin?",
    "Geef me een korte inleiding tot {t}.",
};

constexpr std::array<std::string_view, 12> kFollowUps = {
    "Kun je daar een concreet voorbeeld bij geven?",
    "Waarom is dat eigenlijk zo belangrijk?",
    "Hoe pas ik dit toe in de praktijk?",
    "Wat zijn de grootste misverstanden hierover?",
    "Kun je dat iets eenvoudiger uitleggen?",
    "Welke stappen raad je aan om te beginnen?",
    "Zijn er nadelen waar ik rekening mee moet houden?",
    "Hoe verhoudt dit zich tot wat je eerder zei?",
    "Kun je de belangrijkste punten nog eens samenvatten?",
    "Wat zou je iemand zonder ervaring aanraden?",
    "Bestaat er onderzoek dat dit ondersteunt?",
    "Hoe lang duurt het voordat je hier resultaat van ziet?",
};

constexpr std::array<std::string_view, 24> kStatements = {
    "Dat is een goede vraag, en het antwoord hangt af van de context.",
    "In de praktijk zie je dat kleine stappen vaak het beste werken.",
    "Het belangrijkste principe is dat je begint met een duidelijke basis.",
    "Er zijn verschillende manieren om dit aan te pakken, elk met eigen "
    "voordelen.",
    "Onderzoek laat zien dat regelmaat meer oplevert dan intensiteit.",
    "Een veelgemaakte fout is dat mensen te snel te veel willen.",
    "Je kunt dit het beste vergelijken met het leren van een nieuwe taal.",
    "De kern van de zaak is dat oorzaak en gevolg hier nauw samenhangen.",
    "Denk bijvoorbeeld aan de manier waarop water door een polder stroomt.",
    "Met een eenvoudig voorbeeld wordt het meteen een stuk duidelijker.",
    "Historisch gezien is dit idee al eeuwen oud, maar nog steeds actueel.",
    "Als je dit stap voor stap opbouwt, blijft het overzichtelijk.",
    "Het verschil zit vooral in de details, niet in de grote lijnen.",
    "Veel mensen onderschatten hoeveel invloed de omgeving heeft.",
    "In Nederland en Vlaanderen wordt dit op vergelijkbare wijze aangepakt.",
    "Een handige vuistregel is om altijd eerst het doel te bepalen.",
    "De techniek erachter is verrassend eenvoudig als je het eenmaal "
    "doorziet.",
    "Samengevat komt het neer op goede voorbereiding en geduld.",
    "Dat klopt gedeeltelijk, maar er is een belangrijke nuance.",
    "Laten we de belangrijkste punten even op een rij zetten.",
    "Het proces verloopt in drie fasen die elkaar logisch opvolgen.",
    "Wetenschappers zijn het hier grotendeels over eens, al blijft er "
    "discussie.",
    "Je merkt het effect vaak pas na een paar weken oefenen.",
    "Daarom loont het om eerst klein te beginnen en daarna uit te breiden.",
};

constexpr std::array<std::string_view, 5> kInstructions = {
    "Leg in je eigen woorden uit hoe {t} werkt en geef een concreet "
    "voorbeeld.",
    "Schrijf een korte, duidelijke samenvatting over {t} voor een algemeen "
    "publiek.",
    "Beschrijf de belangrijkste aandachtspunten rond {t} en licht ze kort "
    "toe.",
    "Geef een overzicht van {t} en benoem de drie belangrijkste inzichten.",
    "Vertel hoe je {t} aan een beginner zou uitleggen.",
};

std::string fill_topic(std::string_view tmpl, std::string_view topic) {
  std::string out(tmpl);
  const std::size_t pos = out.find("{t}");
  if (pos != std::string::npos) out.replace(pos, 3, topic);
  return out;
}

int whitespace_tokens(std::string_view s) {
  int n = 0;
  bool in_token = false;
  for (char c : s) {
    const bool space = c == ' ' || c == '\n' || c == '\t' || c == '\r';
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

class MockBackend final : public ChatBackend {
 public:
  explicit MockBackend(std::uint64_t seed) : seed_(seed) {}

  CompletionResult complete(const ChatRequest& request) override {
    std::string joined(purpose_name(request.purpose));
    for (const Turn& t : request.messages) {
      joined += '\x1f';
      joined += t.content;
    }
    if (joined.find("[[content_filter]]") != std::string::npos) {
      CompletionResult out;
      out.finish_reason = FinishReason::ContentFilter;
      return out;
    }
    const std::uint64_t h = text::mix64(seed_ ^ text::fnv1a64(joined));

    std::string body;
    switch (request.purpose) {
      case Purpose::Generate: body = transcript(h); break;
      case Purpose::Translate: body = translation(h); break;
      case Purpose::Answer: body = answer(h); break;
      case Purpose::Judge: body = rating(h); break;
    }
    CompletionResult out;
    out.text = std::move(body);
    out.finish_reason = FinishReason::Stop;
    out.usage = TokenUsage{whitespace_tokens(joined),
                           whitespace_tokens(out.text)};
    return out;
  }

 private:
  template <std::size_t N>
  static std::string_view pick(const std::array<std::string_view, N>& bank,
                               std::uint64_t h) {
    return bank[h % N];
  }

  static std::uint64_t sub(std::uint64_t h, std::uint64_t salt) {
    return text::mix64(h + 0x9E3779B97F4A7C15ull * (salt + 1));
  }

  static std::string sentences(std::uint64_t h, int count) {
    std::string out;
    for (int i = 0; i < count; ++i) {
      if (i > 0) out += ' ';
      out += pick(kStatements, sub(h, static_cast<std::uint64_t>(i)));
    }
    return out;
  }

  static std::string transcript(std::uint64_t h) {
    const std::size_t exchanges = 5 + h % 8;  // 5..12
    const std::string_view topic = pick(kTopics, sub(h, 100));
    std::ostringstream out;
    for (std::size_t i = 0; i < exchanges; ++i) {
      const std::uint64_t hu = sub(h, 2 * i);
      const std::uint64_t ha = sub(h, 2 * i + 1);
      if (i > 0) out << "\n\n";
      out << "gebruiker: "
          << (i == 0 ? fill_topic(pick(kOpeners, hu), topic)
                     : std::string(pick(kFollowUps, hu)));
      out << "\nassistent: " << sentences(ha, 2 + static_cast<int>(ha % 2));
      if (h % 17 == 0 && i == exchanges / 2) {
        out << " Als AI-model kan ik hier verder weinig over zeggen.";
      } else if (h % 23 == 1 && i == exchanges / 2) {
        out << " Het spijt me, maar dit valt buiten mijn vakgebied.";
      }
    }
    return out.str();
  }

  static std::string translation(std::uint64_t h) {
    const std::string_view topic = pick(kTopics, sub(h, 7));
    return fill_topic(pick(kInstructions, sub(h, 11)), topic);
  }

  static std::string answer(std::uint64_t h) {
    return sentences(sub(h, 13), 2 + static_cast<int>(h % 3));
  }

  static std::string rating(std::uint64_t h) {
    const std::uint64_t r = sub(h, 17) % 8;
    const int k = r == 0 ? 3 : (r <= 4 ? 4 : 5);
    std::string tag = "<rating>" + std::to_string(k) + "</rating>";
    if (h % 5 == 0) return "Beoordeling: " + tag;
    return tag;
  }

  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<ChatBackend> make_mock_backend(std::uint64_t seed) {
  return std::make_unique<MockBackend>(seed);
}

}  // namespace polder
