#include "polder/prompts.hpp"

namespace polder::templates {

// Vendored verbatim, including the source's spelling and the trailing
// space after "geeft. ". Do not reflow.
const std::string_view kGeneration =
    R"TPL(# Simulatie van Interactie Tussen een Gebruiker en een AI-assistent

Je simuleert een interactie tussen een gebruiker met een gegeven 'Persona' en een AI-assistent. De interactie wordt gestart op basis van een gegeven 'Startvraag'.

## Persona van Gebruiker

De gebruiker krijgt een specifieke 'Persona' toegewezen, die diens manier van communiceren en de persoonlijkheid omschrijft. Alles dat de gebruiker zegt moet dus in lijn zijn met de karaktereigenschappen en communicatiestijl van de toegewezen Persona. De AI-assistent gedraagt zich als een behulpzame assistent en moet de vragen van de gebruiker objectief, en zo goed en eerlijk mogelijk beantwoorden en de instructies juist volgen.

## Startvraag

Je krijgt een 'Startvraag' in het Engels mee als startpunt van de interactie. Dat kan een vraag of instructie zijn. Als eerste stap moet je deze startvraag vertalen naar het Nederlands en volledig aanpassen aan het taalgebruik en persona van de gebruiker zodat de gebruiker met deze aangepaste vraag of instructie het gesprek kan beginnen. Zorg ervoor dat ALLE inhoud van de oorspronkelijk vraag behouden blijft maar pas waar nodig de schrijfstijl grondig aan.

## Beurten

Na de startvraag antwoordt de assistent. Afhankelijk van de persona kan de gebruiker daarna vragen om meer details, gerelateerde informatie, het antwoord in vraag stellen, of de instructies verder verfijnen. Dat gebeurt in verschillende op elkaar voortbouwende interacties zoals in een echt gesprek. Het gesprek neemt tussen de 5 en 12 beurten van zowel de gebruiker als de assisent in beslag. Gebruikers met Persona's die meer vragen stellen, zullen dus meer beurten nodig hebben.

## Taalgebruik

De vragen, instructies en antwoorden moeten in het Standaardnederlands geschreven zijn tenzij anders aangegeven in de Persona van de gebruiker. De taal is verzorgd en bevat geen regionale variatie zodat het over het hele taalgebied (waaronder Nederland en Vlaanderen) zonder problemen begrepen kan worden.

## Input en Output Formaat

Als input krijg je een 'Persona' van de gebruiker en een 'Startvraag' of instructie in het Engels. Voorbeeld input:

```
<persona>
[Beschrijving van de Persona van de gebruiker]
</persona>
<startvraag>
[Een korte of lange vraag of instructie in het Engels die eerst vertaald moet worden en dan aangepast moet worden aan de persona]
</startvraag>
```

De output moet simpel gestructureerd zijn zodat je voor de gebruiker en assistent respectievelijk de gebruikersvraag of -instructie en het antwoord van de assistent geeft. 

Voorbeeld output:

```
gebruiker: [Vertaling en aanpassing van de Startvraag aan de persona in passend taalgebruik]
assistent: [antwoord op de vorige gebruikersvraag of -instructie]

gebruiker: [vervolgvraag-1]
assistent: [antwoord op de vorige vervolgvraag-1]

gebruiker: [vervolgvraag-2]
assistent: [antwoord op de vorige vervolgvraag-2]
```

---

<persona>
{persona}
</persona>
<startvraag>
{subject}
</startvraag>
)TPL";

const std::string_view kRating =
    R"TPL(Het volgende is een instructie geschreven door een mens (`Instructie:`), en een reactie op de instructie geschreven door een AI-model (`Reactie:`). Beoordeel de kwaliteit van de reactie van het AI-model, rekening houdend met de gegeven opties (`Opties:`).

Instructie:
{prompt}

---

Reactie:
{response}

---

Criteria: {criterion_question}

Opties:
{criterion_options}

---

Je antwoord moet in het volgende formaat zijn:

<rating>[{{min_score}}-{{max_score}}]</rating>

bijvoorbeeld:

<rating>3</rating>

---

Beoordeel nu alsjeblieft de `Reactie:` met een rating op basis van de `Opties:`. Geef geen extra uitleg.)TPL";

const std::string_view kRatingOption = "- {score}: {beschrijving}";

// Not part of the vendored material; fixed here and frozen as a golden
// file so translation runs stay auditable.
const std::string_view kTranslationSystem =
    "Vertaal de volgende tekst van het Engels naar het Nederlands. Blijf "
    "trouw aan de betekenis en de toon van de brontekst en voeg niets toe. "
    "Laat codeblokken, URL's, variabelenamen en opmaak (zoals Markdown) "
    "ongewijzigd staan; vertaal commentaar binnen code niet. Antwoord "
    "uitsluitend met de vertaling, zonder inleiding of extra uitleg.";

}  // namespace polder::templates
