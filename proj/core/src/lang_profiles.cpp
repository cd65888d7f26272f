#include "polder/lang_id.hpp"

// Training text for the built-in n-gram profiles. Register is deliberately
// mixed (everyday prose, instructions, a little technical writing) because
// that is what the pipeline filters. Changing these corpora changes
// detector behavior; the held-out accuracy test must be re-run after edits.

namespace polder::lang_corpus {

const std::string_view kDutch = R"(
De zon kwam langzaam op boven de weilanden en de eerste fietsers reden al
richting het station. In Nederland en Vlaanderen begint de dag vroeg, zeker
wanneer de treinen weer eens vertraging hebben. Mensen drinken koffie,
lezen het nieuws op hun telefoon en praten over het weer, want over het
weer valt altijd wel iets te zeggen. Het regent vaak, maar daar zijn we aan
gewend geraakt.

Wie een nieuwe taal wil leren, moet vooral veel oefenen. Het is belangrijk
om elke dag een beetje te lezen en te schrijven, ook als het moeilijk is.
Begin met eenvoudige zinnen en bouw de woordenschat rustig op. Na een paar
maanden merk je dat je steeds meer begrijpt van gesprekken op straat, in de
winkel en op het werk. Vraag gerust om hulp wanneer iets niet duidelijk is;
de meeste mensen leggen het graag nog een keer uit.

De gemeente heeft besloten om het oude zwembad te renoveren in plaats van
het te slopen. Volgens de wethouder is dat goedkoper en beter voor de
buurt. De werkzaamheden beginnen volgend voorjaar en duren ongeveer
anderhalf jaar. Tijdens de verbouwing kunnen inwoners terecht in het
sportcentrum aan de rand van de stad. Er komt ook een nieuwe
fietsenstalling, want steeds meer bezoekers komen met de fiets.

Als je een computerprogramma schrijft, is het verstandig om je code in
kleine stukken te verdelen. Geef elke functie een duidelijke naam en
controleer de invoer voordat je ermee rekent. Schrijf tests voor de
belangrijkste onderdelen, zodat je fouten vroeg ontdekt. Documentatie hoeft
niet lang te zijn, maar moet wel uitleggen waarom het programma zo is
opgebouwd. Een goede ontwikkelaar denkt eerst na en typt daarna pas.

Het recept is eenvoudig: snijd de uien fijn, bak ze zachtjes in wat boter
en voeg daarna de aardappelen en de bouillon toe. Laat de soep twintig
minuten koken en breng haar op smaak met peper en zout. Serveer met vers
brood van de bakker om de hoek. Voor de liefhebbers kan er een scheutje
room doorheen, al vinden sommigen dat zonde van de smaak.

Gisteren bezochten we het museum in het centrum. De tentoonstelling over de
schilders van de zeventiende eeuw was indrukwekkend, vooral de manier
waarop licht en schaduw werden gebruikt. Mijn broer vond de oude kaarten
het mooist, terwijl mijn zus vooral naar de portretten keek. Na afloop
dronken we warme chocolademelk op het plein en bespraken we welke zaal ons
het meest was bijgebleven. Volgende week gaan we opnieuw, want we hebben
nog lang niet alles gezien.

Sparen voor later blijft verstandig, zegt de bank, maar veel jongeren
geven hun geld liever uit aan reizen en concerten. Toch is het handig om
elke maand een klein bedrag opzij te zetten voor onverwachte kosten, zoals
een kapotte wasmachine of een dure reparatie aan de auto. Wie vroeg begint,
heeft later meer keuze en minder zorgen. Dat klinkt saai, maar het geeft
rust in het hoofd en ruimte voor nieuwe plannen.

Morgen wordt het wisselvallig met in de ochtend kans op een enkele bui,
vooral in het noorden van het land. In de middag breekt de zon af en toe
door en loopt de temperatuur op tot een graad of achttien. Aan zee staat
een stevige wind uit het westen, dus neem een jas mee als je gaat wandelen
langs het strand. Het weekend belooft droog en zonnig te worden.

De wedstrijd eindigde gisteravond in een gelijkspel, al verdiende de
thuisploeg volgens veel supporters de overwinning. In de eerste helft
kregen de aanvallers drie grote kansen, maar de keeper van de bezoekers
hield zijn doel schoon. Na de rust werd het spel rommeliger en vielen er
aan beide kanten doelpunten. De trainer sprak na afloop van een leerzaam
duel en kijkt alweer vooruit naar de volgende ronde van de beker.

Wie gezond wil blijven, hoeft geen dure abonnementen te nemen. Dagelijks
een half uur stevig doorlopen, voldoende water drinken, groente en fruit
eten en op tijd naar bed gaan: daarmee ben je al een heel eind. Vermijd
lange periodes van stilzitten en neem de trap in plaats van de lift. Bij
aanhoudende klachten is het verstandig om de huisarts te raadplegen, want
voorkomen is nog altijd beter dan genezen.

Het bestuur nodigt alle leden uit voor de jaarlijkse vergadering in het
buurthuis. Op de agenda staan de begroting voor volgend jaar, de verkiezing
van twee nieuwe bestuursleden en een voorstel om de contributie gelijk te
houden. Na het officiële gedeelte is er gelegenheid om na te praten met
koffie en iets lekkers erbij. Kun je er niet bij zijn, meld je dan vooraf
even af via de bekende kanalen, zodat we weten op hoeveel mensen we kunnen
rekenen.

In de keuken draait alles om voorbereiding: snijd de groenten vooraf, zet
de kruiden klaar en lees het recept eerst helemaal door. Eieren, bloem en
melk vormen de basis van veel gerechten, van pannenkoeken tot een hartige
taart. Proef tussendoor en breng op smaak met een snufje zout, wat peper
of een lepel mosterd. Wie regelmatig kookt, merkt dat het steeds sneller
en makkelijker gaat, en dat verse ingrediënten echt het verschil maken.

De veerpont over de rivier vaart ieder halfuur, maar bij dichte mist of
hoog water blijft hij aan de kant. Fietsers en voetgangers betalen een
klein bedrag per overtocht; een abonnement is voordeliger voor wie elke
dag moet oversteken. Aan de overkant liggen de boomgaarden waar in de
herfst appels en peren worden geplukt. Het pontje is al generaties lang
het vertrouwde begin van een dagje wandelen langs het water.
)";

const std::string_view kEnglish = R"(
The sun rose slowly over the fields and the first cyclists were already on
their way to the station. People drink coffee, read the news on their
phones and talk about the weather, because there is always something to
say about the weather. It rains often here, but everyone has gotten used
to it by now, and the day simply begins.

Anyone who wants to learn a new language should practice as much as
possible. It is important to read and write a little every day, even when
it feels difficult. Start with simple sentences and build your vocabulary
step by step. After a few months you will notice that you understand more
of the conversations in the street, in the shops and at work. Do not be
afraid to ask for help when something is unclear; most people are happy to
explain it one more time.

The city council has decided to renovate the old swimming pool instead of
tearing it down. According to the alderman this is cheaper and better for
the neighbourhood. The work starts next spring and will take about a year
and a half. During the renovation residents can use the sports centre on
the edge of town. There will also be new bicycle parking, because more and
more visitors arrive by bike every year.

When you write a computer program, it is wise to divide your code into
small pieces. Give every function a clear name and check the input before
you use it in a calculation. Write tests for the most important parts so
that you discover mistakes early. Documentation does not have to be long,
but it should explain why the program is built the way it is. A good
developer thinks first and types later.

The recipe is simple: chop the onions finely, fry them gently in a little
butter and then add the potatoes and the stock. Let the soup cook for
twenty minutes and season it with pepper and salt. Serve it with fresh
bread from the bakery around the corner. Those who like it richer can stir
in a splash of cream, although some say that spoils the taste.

Yesterday we visited the museum in the city centre. The exhibition about
seventeenth century painters was impressive, especially the way light and
shadow were used. My brother liked the old maps best, while my sister
spent most of her time with the portraits. Afterwards we drank hot
chocolate on the square and discussed which room we remembered most.

Saving for later remains sensible, says the bank, but many young people
would rather spend their money on travel and concerts. Still, it is useful
to set aside a small amount every month for unexpected costs, such as a
broken washing machine or an expensive car repair. Those who start early
have more choices later and fewer worries. That may sound boring, but it
brings peace of mind and room for new plans.

Tomorrow will be changeable with a chance of a shower in the morning,
especially in the north of the country. In the afternoon the sun will
break through now and then and the temperature will climb to about
eighteen degrees. Along the coast a strong westerly wind is expected, so
take a coat if you plan to walk on the beach. The weekend promises to be
dry and sunny, perfect for a trip to the market.

The match ended in a draw last night, although many supporters felt the
home team deserved the win. In the first half the attackers created three
big chances, but the visiting goalkeeper kept a clean sheet. After the
break the game became scrappier and both sides scored. The coach spoke of
a useful lesson afterwards and is already looking ahead to the next round
of the cup.

Anyone who wants to stay healthy does not need expensive subscriptions. A
brisk half hour walk every day, enough water, vegetables and fruit, and
going to bed on time will take you a long way. Avoid long periods of
sitting still and take the stairs instead of the lift. If complaints
persist, it is wise to consult your doctor, because prevention is still
better than cure.

The board invites all members to the annual meeting in the community
centre. On the agenda are the budget for next year, the election of two
new board members and a proposal to keep the membership fee unchanged.
After the official part there will be time to catch up over coffee and
something sweet. If you cannot attend, please let us know in advance
through the usual channels so we know how many people to expect.
)";

const std::string_view kGerman = R"(
Die Sonne ging langsam über den Feldern auf, und die ersten Radfahrer
waren schon auf dem Weg zum Bahnhof. Die Menschen trinken Kaffee, lesen
die Nachrichten auf ihren Telefonen und sprechen über das Wetter, denn
über das Wetter gibt es immer etwas zu sagen. Es regnet hier oft, aber
daran haben sich alle längst gewöhnt, und der Tag beginnt trotzdem.

Wer eine neue Sprache lernen will, sollte vor allem viel üben. Es ist
wichtig, jeden Tag ein wenig zu lesen und zu schreiben, auch wenn es
schwierig ist. Beginnen Sie mit einfachen Sätzen und bauen Sie den
Wortschatz in Ruhe auf. Nach ein paar Monaten merkt man, dass man immer
mehr von den Gesprächen auf der Straße, im Geschäft und bei der Arbeit
versteht. Fragen Sie ruhig nach, wenn etwas unklar ist; die meisten
Menschen erklären es gern noch einmal.

Die Gemeinde hat beschlossen, das alte Schwimmbad zu renovieren, statt es
abzureißen. Nach Ansicht des Stadtrats ist das billiger und besser für das
Viertel. Die Arbeiten beginnen im nächsten Frühjahr und dauern ungefähr
eineinhalb Jahre. Während des Umbaus können die Einwohner das Sportzentrum
am Rande der Stadt nutzen. Es wird auch neue Fahrradständer geben, denn
immer mehr Besucher kommen mit dem Rad.

Wenn man ein Computerprogramm schreibt, ist es klug, den Code in kleine
Teile zu gliedern. Geben Sie jeder Funktion einen klaren Namen und prüfen
Sie die Eingabe, bevor Sie damit rechnen. Schreiben Sie Tests für die
wichtigsten Teile, damit Fehler früh entdeckt werden. Die Dokumentation
muss nicht lang sein, aber sie sollte erklären, warum das Programm so
aufgebaut ist. Ein guter Entwickler denkt zuerst nach und tippt erst dann.

Das Rezept ist einfach: die Zwiebeln fein schneiden, in etwas Butter
glasig braten und danach die Kartoffeln und die Brühe hinzufügen. Die
Suppe zwanzig Minuten kochen lassen und mit Pfeffer und Salz abschmecken.
Dazu frisches Brot vom Bäcker um die Ecke servieren. Wer mag, rührt einen
Schuss Sahne hinein, auch wenn manche sagen, das verderbe den Geschmack.

Gestern haben wir das Museum in der Innenstadt besucht. Die Ausstellung
über die Maler des siebzehnten Jahrhunderts war beeindruckend, besonders
die Art, wie Licht und Schatten eingesetzt wurden. Mein Bruder fand die
alten Karten am schönsten, während meine Schwester die meiste Zeit bei den
Porträts verbrachte. Danach tranken wir heiße Schokolade auf dem Platz.

Für später zu sparen bleibt vernünftig, sagt die Bank, aber viele junge
Leute geben ihr Geld lieber für Reisen und Konzerte aus. Trotzdem ist es
nützlich, jeden Monat einen kleinen Betrag für unerwartete Kosten
zurückzulegen, etwa für eine kaputte Waschmaschine oder eine teure
Reparatur am Auto. Wer früh anfängt, hat später mehr Auswahl und weniger
Sorgen. Das klingt langweilig, bringt aber Ruhe und Raum für neue Pläne.

Morgen wird es wechselhaft mit einzelnen Schauern am Vormittag, vor allem
im Norden des Landes. Am Nachmittag zeigt sich ab und zu die Sonne, und
die Temperatur steigt auf etwa achtzehn Grad. An der Küste weht ein
kräftiger Wind aus Westen, nehmen Sie also eine Jacke mit, wenn Sie am
Strand spazieren gehen wollen. Das Wochenende verspricht trocken und
sonnig zu werden, ideal für einen Ausflug auf den Markt.

Das Spiel endete gestern Abend unentschieden, obwohl viele Fans fanden,
dass die Heimmannschaft den Sieg verdient hätte. In der ersten Halbzeit
hatten die Stürmer drei große Chancen, doch der Torwart der Gäste hielt
seinen Kasten sauber. Nach der Pause wurde die Partie zerfahrener, und auf
beiden Seiten fielen Tore. Der Trainer sprach hinterher von einem
lehrreichen Duell und blickt bereits auf die nächste Runde des Pokals.

Wer gesund bleiben will, braucht keine teuren Mitgliedschaften. Täglich
eine halbe Stunde zügig gehen, genug Wasser trinken, Gemüse und Obst essen
und rechtzeitig ins Bett gehen: damit ist schon viel gewonnen. Vermeiden
Sie langes Sitzen und nehmen Sie die Treppe statt des Aufzugs. Bei
anhaltenden Beschwerden ist es klug, den Hausarzt zu fragen, denn
Vorbeugen ist immer noch besser als Heilen.

Der Vorstand lädt alle Mitglieder zur jährlichen Versammlung im
Gemeindehaus ein. Auf der Tagesordnung stehen der Haushalt für das
kommende Jahr, die Wahl zweier neuer Vorstandsmitglieder und der Vorschlag,
den Beitrag unverändert zu lassen. Nach dem offiziellen Teil gibt es
Gelegenheit, bei Kaffee und Kuchen ins Gespräch zu kommen. Wer nicht dabei
sein kann, meldet sich bitte vorher über die bekannten Wege ab.
)";

const std::string_view kFrench = R"(
Le soleil se levait lentement sur les champs et les premiers cyclistes
étaient déjà en route vers la gare. Les gens boivent du café, lisent les
nouvelles sur leur téléphone et parlent du temps, car il y a toujours
quelque chose à dire sur le temps. Il pleut souvent ici, mais tout le
monde s'y est habitué depuis longtemps, et la journée commence quand même.

Celui qui veut apprendre une nouvelle langue doit surtout beaucoup
pratiquer. Il est important de lire et d'écrire un peu chaque jour, même
quand c'est difficile. Commencez par des phrases simples et construisez
votre vocabulaire petit à petit. Après quelques mois, on remarque qu'on
comprend de mieux en mieux les conversations dans la rue, dans les
magasins et au travail. N'hésitez pas à demander de l'aide quand quelque
chose n'est pas clair ; la plupart des gens expliquent volontiers encore
une fois.

La commune a décidé de rénover la vieille piscine au lieu de la démolir.
Selon l'adjoint au maire, c'est moins cher et meilleur pour le quartier.
Les travaux commencent au printemps prochain et dureront environ un an et
demi. Pendant la rénovation, les habitants peuvent utiliser le centre
sportif au bord de la ville. Il y aura aussi un nouveau parking pour les
vélos, car de plus en plus de visiteurs arrivent à vélo.

Quand on écrit un programme informatique, il est sage de diviser le code
en petites parties. Donnez à chaque fonction un nom clair et vérifiez les
données avant de faire des calculs. Écrivez des tests pour les parties les
plus importantes afin de découvrir les erreurs tôt. La documentation n'a
pas besoin d'être longue, mais elle doit expliquer pourquoi le programme
est construit ainsi. Un bon développeur réfléchit d'abord et tape ensuite.

La recette est simple : émincez les oignons, faites-les revenir doucement
dans un peu de beurre, puis ajoutez les pommes de terre et le bouillon.
Laissez cuire la soupe pendant vingt minutes et assaisonnez avec du poivre
et du sel. Servez avec du pain frais de la boulangerie du coin. Les
gourmands peuvent ajouter un peu de crème, même si certains disent que
cela gâche le goût.

Hier, nous avons visité le musée du centre-ville. L'exposition sur les
peintres du dix-septième siècle était impressionnante, surtout la manière
dont la lumière et l'ombre étaient utilisées. Mon frère a préféré les
vieilles cartes, tandis que ma sœur a passé la plupart du temps devant les
portraits. Ensuite, nous avons bu un chocolat chaud sur la place.

Épargner pour plus tard reste raisonnable, dit la banque, mais beaucoup de
jeunes préfèrent dépenser leur argent en voyages et en concerts. Pourtant,
il est utile de mettre de côté une petite somme chaque mois pour les
dépenses imprévues, comme une machine à laver cassée ou une réparation
coûteuse de la voiture. Ceux qui commencent tôt ont plus de choix plus
tard et moins de soucis. Cela semble ennuyeux, mais cela apporte la paix
de l'esprit et de la place pour de nouveaux projets.

Demain, le temps sera variable avec un risque d'averses le matin, surtout
dans le nord du pays. Dans l'après-midi, le soleil se montrera de temps en
temps et la température montera jusqu'à environ dix-huit degrés. Sur la
côte, un vent fort soufflera de l'ouest, alors prenez une veste si vous
comptez vous promener sur la plage. Le week-end s'annonce sec et
ensoleillé, parfait pour une sortie au marché.

Le match s'est terminé hier soir sur un match nul, même si beaucoup de
supporters estimaient que l'équipe à domicile méritait la victoire. En
première mi-temps, les attaquants se sont créé trois grosses occasions,
mais le gardien des visiteurs a gardé sa cage inviolée. Après la pause, le
jeu est devenu plus brouillon et les deux équipes ont marqué. L'entraîneur
a parlé ensuite d'un duel instructif et pense déjà au prochain tour de la
coupe.

Celui qui veut rester en bonne santé n'a pas besoin d'abonnements chers.
Une demi-heure de marche rapide chaque jour, assez d'eau, des légumes et
des fruits, et se coucher à l'heure : voilà déjà un bon début. Évitez de
rester assis trop longtemps et prenez l'escalier plutôt que l'ascenseur.
Si les plaintes persistent, il est sage de consulter le médecin, car
prévenir vaut toujours mieux que guérir.

Le conseil invite tous les membres à la réunion annuelle dans la salle du
quartier. À l'ordre du jour figurent le budget de l'année prochaine,
l'élection de deux nouveaux membres du conseil et une proposition de
maintenir la cotisation au même niveau. Après la partie officielle, il y
aura le temps de discuter autour d'un café et d'une part de gâteau. Si
vous ne pouvez pas venir, merci de prévenir à l'avance par les canaux
habituels.
)";

}  // namespace polder::lang_corpus
