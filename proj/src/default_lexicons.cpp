#include <initializer_list>
#include <utility>

#include "navprobe/lexicons.hpp"

namespace navprobe {

namespace {

// Canonical direction-word list; left/right masking targets the first two.
constexpr const char* kSpatialWords[] = {
    "right", "left", "straight", "toward", "around",  "near",  "front",
    "above", "through", "down",  "up",     "between", "past",
};

constexpr const char* kNumberWords[] = {
    "one",    "two",      "three",    "four",     "five",    "six",     "seven",
    "eight",  "nine",     "ten",      "eleven",   "twelve",  "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
};

// Indoor objects, rooms, fixtures and architectural elements. Stair words
// are deliberately absent: the instruction generator emits them, and its
// output must contain no object-lexicon tokens.
constexpr const char* kObjectWords[] = {
    // rooms and areas
    "room", "rooms", "bathroom", "bathrooms", "bedroom", "bedrooms", "kitchen",
    "hallway", "hallways", "hall", "halls", "closet", "closets", "office", "lounge",
    "foyer", "lobby", "den", "study", "pantry", "laundry", "garage", "basement",
    "attic", "balcony", "porch", "patio", "deck", "cellar", "nursery", "gym",
    "sauna", "entryway", "entrance", "doorway", "doorways", "corridor", "vestibule",
    "alcove", "library",
    // furniture
    "table", "tables", "chair", "chairs", "couch", "couches", "sofa", "sofas",
    "bed", "beds", "desk", "desks", "dresser", "drawer", "drawers", "cabinet",
    "cabinets", "shelf", "shelves", "bookshelf", "bookshelves", "bookcase",
    "nightstand", "stool", "stools", "bench", "benches", "ottoman", "armchair",
    "recliner", "wardrobe", "bureau", "hutch", "sideboard", "buffet", "crib",
    "futon", "mattress", "cushion", "cushions", "pillow", "pillows", "headboard",
    // fixtures
    "sink", "sinks", "toilet", "toilets", "shower", "showers", "bathtub", "tub",
    "faucet", "mirror", "mirrors", "counter", "counters", "countertop", "island",
    "vanity", "urinal", "bidet", "fireplace", "mantel", "mantle", "chandelier",
    "lamp", "lamps", "light", "lights", "sconce", "fan", "fans", "vent",
    "radiator", "heater", "thermostat", "switch", "outlet", "towel", "towels",
    "rack", "hook", "hooks",
    // appliances
    "fridge", "refrigerator", "freezer", "oven", "stove", "stovetop", "microwave",
    "dishwasher", "washer", "dryer", "television", "tv",
    // architecture
    "door", "doors", "window", "windows", "wall", "walls", "floor", "floors",
    "ceiling", "ceilings", "column", "columns", "pillar", "pillars", "railing",
    "railings", "banister", "rail", "rails", "arch", "archway", "beam", "beams",
    "ledge", "landing", "ramp", "elevator", "windowsill", "sill", "threshold",
    "gate", "fence",
    // decor
    "rug", "rugs", "carpet", "mat", "picture", "pictures", "painting", "paintings",
    "portrait", "photo", "photos", "photograph", "vase", "vases", "plant", "plants",
    "pot", "pots", "statue", "sculpture", "artwork", "art", "clock", "curtain",
    "curtains", "drapes", "blinds", "basket", "baskets", "box", "boxes", "book",
    "books", "bottle", "candle", "candles", "bowl", "tray", "ornament", "figurine",
    "tapestry", "wreath", "frame", "frames", "chest",
    // everything else that shows up indoors
    "pool", "jacuzzi", "piano", "guitar", "treadmill", "bike", "bicycle",
    "barstool", "bar", "crate", "barrel", "bin", "trash", "trashcan", "hamper",
    "ladder", "grill", "fountain", "planter", "tree", "trees", "bush", "bushes",
    "rock", "rocks", "car", "cars", "plate", "plates", "cup", "cups", "glass",
    "glasses", "pan", "pans", "kettle", "toaster", "blender",
};

// First match wins; a rule fires only when the token keeps at least two
// characters of stem.
const std::initializer_list<SuffixRule> kSuffixRules = {
    {"ly", PosTag::Adverb},    {"ing", PosTag::Verb},      {"ed", PosTag::Verb},
    {"est", PosTag::Adjective}, {"ous", PosTag::Adjective}, {"ful", PosTag::Adjective},
    {"ish", PosTag::Adjective}, {"ive", PosTag::Adjective}, {"able", PosTag::Adjective},
    {"ible", PosTag::Adjective}, {"less", PosTag::Adjective}, {"wards", PosTag::Adverb},
    {"ward", PosTag::Adverb},
};

const std::initializer_list<std::pair<const char*, PosTag>> kTagEntries = {
    // determiners
    {"the", PosTag::Determiner}, {"a", PosTag::Determiner}, {"an", PosTag::Determiner},
    {"this", PosTag::Determiner}, {"that", PosTag::Determiner}, {"these", PosTag::Determiner},
    {"those", PosTag::Determiner}, {"some", PosTag::Determiner}, {"any", PosTag::Determiner},
    {"each", PosTag::Determiner}, {"every", PosTag::Determiner}, {"no", PosTag::Determiner},
    {"another", PosTag::Determiner}, {"all", PosTag::Determiner}, {"both", PosTag::Determiner},
    {"either", PosTag::Determiner}, {"neither", PosTag::Determiner}, {"such", PosTag::Determiner},
    {"its", PosTag::Determiner}, {"my", PosTag::Determiner}, {"your", PosTag::Determiner},
    {"his", PosTag::Determiner}, {"her", PosTag::Determiner}, {"our", PosTag::Determiner},
    {"their", PosTag::Determiner}, {"whose", PosTag::Determiner},
    // pronouns
    {"you", PosTag::Pronoun}, {"it", PosTag::Pronoun}, {"they", PosTag::Pronoun},
    {"them", PosTag::Pronoun}, {"he", PosTag::Pronoun}, {"she", PosTag::Pronoun},
    {"we", PosTag::Pronoun}, {"i", PosTag::Pronoun}, {"me", PosTag::Pronoun},
    {"him", PosTag::Pronoun}, {"us", PosTag::Pronoun}, {"yourself", PosTag::Pronoun},
    {"yourselves", PosTag::Pronoun}, {"itself", PosTag::Pronoun},
    {"themselves", PosTag::Pronoun}, {"himself", PosTag::Pronoun},
    {"herself", PosTag::Pronoun}, {"myself", PosTag::Pronoun},
    {"anything", PosTag::Pronoun}, {"something", PosTag::Pronoun},
    {"everything", PosTag::Pronoun}, {"nothing", PosTag::Pronoun},
    {"anyone", PosTag::Pronoun}, {"someone", PosTag::Pronoun},
    {"everyone", PosTag::Pronoun}, {"nobody", PosTag::Pronoun},
    {"who", PosTag::Pronoun}, {"whom", PosTag::Pronoun}, {"which", PosTag::Pronoun},
    {"what", PosTag::Pronoun},
    // prepositions
    {"of", PosTag::Preposition}, {"in", PosTag::Preposition}, {"on", PosTag::Preposition},
    {"at", PosTag::Preposition}, {"by", PosTag::Preposition}, {"for", PosTag::Preposition},
    {"with", PosTag::Preposition}, {"from", PosTag::Preposition}, {"to", PosTag::Preposition},
    {"into", PosTag::Preposition}, {"onto", PosTag::Preposition},
    {"through", PosTag::Preposition}, {"past", PosTag::Preposition},
    {"near", PosTag::Preposition}, {"between", PosTag::Preposition},
    {"behind", PosTag::Preposition}, {"beside", PosTag::Preposition},
    {"under", PosTag::Preposition}, {"over", PosTag::Preposition},
    {"above", PosTag::Preposition}, {"below", PosTag::Preposition},
    {"across", PosTag::Preposition}, {"along", PosTag::Preposition},
    {"around", PosTag::Preposition}, {"toward", PosTag::Preposition},
    {"towards", PosTag::Preposition}, {"until", PosTag::Preposition},
    {"up", PosTag::Preposition}, {"down", PosTag::Preposition},
    {"off", PosTag::Preposition}, {"out", PosTag::Preposition},
    {"inside", PosTag::Preposition}, {"outside", PosTag::Preposition},
    {"within", PosTag::Preposition}, {"without", PosTag::Preposition},
    {"upon", PosTag::Preposition}, {"against", PosTag::Preposition},
    {"beyond", PosTag::Preposition}, {"underneath", PosTag::Preposition},
    {"atop", PosTag::Preposition}, {"amid", PosTag::Preposition},
    {"among", PosTag::Preposition}, {"via", PosTag::Preposition},
    {"during", PosTag::Preposition}, {"after", PosTag::Preposition},
    {"before", PosTag::Preposition}, {"beneath", PosTag::Preposition},
    {"about", PosTag::Preposition},
    // conjunctions
    {"and", PosTag::Conjunction}, {"or", PosTag::Conjunction}, {"but", PosTag::Conjunction},
    {"nor", PosTag::Conjunction}, {"yet", PosTag::Conjunction}, {"if", PosTag::Conjunction},
    {"because", PosTag::Conjunction}, {"while", PosTag::Conjunction},
    {"although", PosTag::Conjunction}, {"though", PosTag::Conjunction},
    {"unless", PosTag::Conjunction}, {"whether", PosTag::Conjunction},
    {"since", PosTag::Conjunction}, {"as", PosTag::Conjunction},
    {"than", PosTag::Conjunction},
    // adverbs
    {"straight", PosTag::Adverb}, {"ahead", PosTag::Adverb}, {"forward", PosTag::Adverb},
    {"forwards", PosTag::Adverb}, {"here", PosTag::Adverb}, {"there", PosTag::Adverb},
    {"now", PosTag::Adverb}, {"then", PosTag::Adverb}, {"just", PosTag::Adverb},
    {"again", PosTag::Adverb}, {"away", PosTag::Adverb}, {"back", PosTag::Adverb},
    {"downstairs", PosTag::Adverb}, {"upstairs", PosTag::Adverb},
    {"once", PosTag::Adverb}, {"twice", PosTag::Adverb}, {"halfway", PosTag::Adverb},
    {"very", PosTag::Adverb}, {"too", PosTag::Adverb}, {"also", PosTag::Adverb},
    {"only", PosTag::Adverb}, {"really", PosTag::Adverb}, {"quite", PosTag::Adverb},
    {"nearly", PosTag::Adverb}, {"not", PosTag::Adverb}, {"never", PosTag::Adverb},
    {"always", PosTag::Adverb}, {"almost", PosTag::Adverb}, {"when", PosTag::Adverb},
    {"where", PosTag::Adverb}, {"how", PosTag::Adverb}, {"why", PosTag::Adverb},
    {"soon", PosTag::Adverb}, {"still", PosTag::Adverb}, {"somewhere", PosTag::Adverb},
    {"anywhere", PosTag::Adverb}, {"everywhere", PosTag::Adverb},
    {"onward", PosTag::Adverb},
    // numerals (the word forms; digit strings are recognized directly)
    {"zero", PosTag::Numeral}, {"one", PosTag::Numeral}, {"two", PosTag::Numeral},
    {"three", PosTag::Numeral}, {"four", PosTag::Numeral}, {"five", PosTag::Numeral},
    {"six", PosTag::Numeral}, {"seven", PosTag::Numeral}, {"eight", PosTag::Numeral},
    {"nine", PosTag::Numeral}, {"ten", PosTag::Numeral}, {"eleven", PosTag::Numeral},
    {"twelve", PosTag::Numeral}, {"thirteen", PosTag::Numeral},
    {"fourteen", PosTag::Numeral}, {"fifteen", PosTag::Numeral},
    {"sixteen", PosTag::Numeral}, {"seventeen", PosTag::Numeral},
    {"eighteen", PosTag::Numeral}, {"nineteen", PosTag::Numeral},
    {"twenty", PosTag::Numeral}, {"thirty", PosTag::Numeral}, {"forty", PosTag::Numeral},
    {"fifty", PosTag::Numeral}, {"sixty", PosTag::Numeral}, {"seventy", PosTag::Numeral},
    {"eighty", PosTag::Numeral}, {"ninety", PosTag::Numeral},
    {"hundred", PosTag::Numeral}, {"thousand", PosTag::Numeral},
    // auxiliaries and modals
    {"is", PosTag::Verb}, {"are", PosTag::Verb}, {"was", PosTag::Verb},
    {"were", PosTag::Verb}, {"be", PosTag::Verb}, {"been", PosTag::Verb},
    {"being", PosTag::Verb}, {"am", PosTag::Verb}, {"do", PosTag::Verb},
    {"does", PosTag::Verb}, {"did", PosTag::Verb}, {"done", PosTag::Verb},
    {"will", PosTag::Verb}, {"would", PosTag::Verb}, {"can", PosTag::Verb},
    {"could", PosTag::Verb}, {"should", PosTag::Verb}, {"shall", PosTag::Verb},
    {"may", PosTag::Verb}, {"might", PosTag::Verb}, {"must", PosTag::Verb},
    {"have", PosTag::Verb}, {"has", PosTag::Verb}, {"had", PosTag::Verb},
    {"having", PosTag::Verb}, {"don", PosTag::Verb}, {"ll", PosTag::Verb},
    {"re", PosTag::Verb}, {"ve", PosTag::Verb},
    // navigation verbs, base forms
    {"walk", PosTag::Verb}, {"turn", PosTag::Verb}, {"go", PosTag::Verb},
    {"stop", PosTag::Verb}, {"wait", PosTag::Verb}, {"continue", PosTag::Verb},
    {"take", PosTag::Verb}, {"make", PosTag::Verb}, {"head", PosTag::Verb},
    {"exit", PosTag::Verb}, {"enter", PosTag::Verb}, {"leave", PosTag::Verb},
    {"pass", PosTag::Verb}, {"proceed", PosTag::Verb}, {"move", PosTag::Verb},
    {"follow", PosTag::Verb}, {"reach", PosTag::Verb}, {"climb", PosTag::Verb},
    {"stand", PosTag::Verb}, {"face", PosTag::Verb}, {"veer", PosTag::Verb},
    {"bear", PosTag::Verb}, {"keep", PosTag::Verb}, {"stay", PosTag::Verb},
    {"cross", PosTag::Verb}, {"approach", PosTag::Verb}, {"arrive", PosTag::Verb},
    {"begin", PosTag::Verb}, {"start", PosTag::Verb}, {"finish", PosTag::Verb},
    {"travel", PosTag::Verb}, {"use", PosTag::Verb}, {"see", PosTag::Verb},
    {"look", PosTag::Verb}, {"find", PosTag::Verb}, {"locate", PosTag::Verb},
    {"remain", PosTag::Verb}, {"halt", PosTag::Verb}, {"say", PosTag::Verb},
    {"let", PosTag::Verb}, {"need", PosTag::Verb}, {"want", PosTag::Verb},
    {"ascend", PosTag::Verb}, {"descend", PosTag::Verb}, {"hang", PosTag::Verb},
    {"sit", PosTag::Verb}, {"step", PosTag::Verb}, {"get", PosTag::Verb},
    {"come", PosTag::Verb}, {"become", PosTag::Verb},
    // third-person forms
    {"walks", PosTag::Verb}, {"turns", PosTag::Verb}, {"goes", PosTag::Verb},
    {"stops", PosTag::Verb}, {"waits", PosTag::Verb}, {"continues", PosTag::Verb},
    {"takes", PosTag::Verb}, {"makes", PosTag::Verb}, {"heads", PosTag::Verb},
    {"exits", PosTag::Verb}, {"enters", PosTag::Verb}, {"leaves", PosTag::Verb},
    {"passes", PosTag::Verb}, {"proceeds", PosTag::Verb}, {"moves", PosTag::Verb},
    {"follows", PosTag::Verb}, {"reaches", PosTag::Verb}, {"climbs", PosTag::Verb},
    {"stands", PosTag::Verb}, {"faces", PosTag::Verb}, {"veers", PosTag::Verb},
    {"bears", PosTag::Verb}, {"keeps", PosTag::Verb}, {"stays", PosTag::Verb},
    {"crosses", PosTag::Verb}, {"approaches", PosTag::Verb}, {"arrives", PosTag::Verb},
    {"begins", PosTag::Verb}, {"starts", PosTag::Verb}, {"finishes", PosTag::Verb},
    {"travels", PosTag::Verb}, {"uses", PosTag::Verb}, {"sees", PosTag::Verb},
    {"looks", PosTag::Verb}, {"finds", PosTag::Verb}, {"locates", PosTag::Verb},
    {"remains", PosTag::Verb}, {"says", PosTag::Verb}, {"lets", PosTag::Verb},
    {"needs", PosTag::Verb}, {"wants", PosTag::Verb}, {"sits", PosTag::Verb},
    {"hangs", PosTag::Verb}, {"comes", PosTag::Verb}, {"gets", PosTag::Verb},
    {"becomes", PosTag::Verb},
    // irregular past and participle forms ("left" stays out on purpose)
    {"went", PosTag::Verb}, {"gone", PosTag::Verb}, {"came", PosTag::Verb},
    {"taken", PosTag::Verb}, {"took", PosTag::Verb}, {"stood", PosTag::Verb},
    {"sat", PosTag::Verb}, {"hung", PosTag::Verb}, {"kept", PosTag::Verb},
    {"made", PosTag::Verb}, {"found", PosTag::Verb}, {"saw", PosTag::Verb},
    {"seen", PosTag::Verb}, {"begun", PosTag::Verb}, {"began", PosTag::Verb},
    {"got", PosTag::Verb}, {"gotten", PosTag::Verb},
    // adjectives
    {"first", PosTag::Adjective}, {"second", PosTag::Adjective},
    {"third", PosTag::Adjective}, {"fourth", PosTag::Adjective},
    {"fifth", PosTag::Adjective}, {"sixth", PosTag::Adjective},
    {"seventh", PosTag::Adjective}, {"eighth", PosTag::Adjective},
    {"ninth", PosTag::Adjective}, {"tenth", PosTag::Adjective},
    {"last", PosTag::Adjective}, {"next", PosTag::Adjective},
    {"other", PosTag::Adjective}, {"same", PosTag::Adjective},
    {"main", PosTag::Adjective}, {"big", PosTag::Adjective},
    {"large", PosTag::Adjective}, {"small", PosTag::Adjective},
    {"little", PosTag::Adjective}, {"long", PosTag::Adjective},
    {"short", PosTag::Adjective}, {"tall", PosTag::Adjective},
    {"wide", PosTag::Adjective}, {"narrow", PosTag::Adjective},
    {"huge", PosTag::Adjective}, {"tiny", PosTag::Adjective},
    {"red", PosTag::Adjective}, {"blue", PosTag::Adjective},
    {"green", PosTag::Adjective}, {"white", PosTag::Adjective},
    {"black", PosTag::Adjective}, {"brown", PosTag::Adjective},
    {"gray", PosTag::Adjective}, {"grey", PosTag::Adjective},
    {"yellow", PosTag::Adjective}, {"orange", PosTag::Adjective},
    {"purple", PosTag::Adjective}, {"pink", PosTag::Adjective},
    {"beige", PosTag::Adjective}, {"golden", PosTag::Adjective},
    {"dark", PosTag::Adjective}, {"bright", PosTag::Adjective},
    {"double", PosTag::Adjective}, {"single", PosTag::Adjective},
    {"open", PosTag::Adjective}, {"closed", PosTag::Adjective},
    {"wooden", PosTag::Adjective}, {"final", PosTag::Adjective},
    {"entire", PosTag::Adjective}, {"whole", PosTag::Adjective},
    {"far", PosTag::Adjective}, {"farther", PosTag::Adjective},
    {"further", PosTag::Adjective}, {"more", PosTag::Adjective},
    {"most", PosTag::Adjective}, {"less", PosTag::Adjective},
    {"least", PosTag::Adjective}, {"many", PosTag::Adjective},
    {"much", PosTag::Adjective}, {"few", PosTag::Adjective},
    {"several", PosTag::Adjective}, {"half", PosTag::Adjective},
    {"upper", PosTag::Adjective}, {"lower", PosTag::Adjective},
    {"round", PosTag::Adjective}, {"oval", PosTag::Adjective},
    {"potted", PosTag::Adjective}, {"tiled", PosTag::Adjective},
    {"olive", PosTag::Adjective}, {"full", PosTag::Adjective},
    {"empty", PosTag::Adjective}, {"new", PosTag::Adjective},
    {"old", PosTag::Adjective}, {"slight", PosTag::Adjective},
    {"sharp", PosTag::Adjective}, {"hard", PosTag::Adjective},
    {"right-hand", PosTag::Adjective}, {"left-hand", PosTag::Adjective},
    // nouns the suffix rules would otherwise mis-tag
    {"painting", PosTag::Noun}, {"paintings", PosTag::Noun},
    {"landing", PosTag::Noun}, {"landings", PosTag::Noun},
    {"building", PosTag::Noun}, {"buildings", PosTag::Noun},
    {"ceiling", PosTag::Noun}, {"ceilings", PosTag::Noun},
    {"railing", PosTag::Noun}, {"railings", PosTag::Noun},
    {"dining", PosTag::Noun}, {"living", PosTag::Noun},
    {"awning", PosTag::Noun}, {"opening", PosTag::Noun},
    {"openings", PosTag::Noun}, {"lighting", PosTag::Noun},
    {"thing", PosTag::Noun}, {"things", PosTag::Noun},
    {"shed", PosTag::Noun}, {"chest", PosTag::Noun}, {"guest", PosTag::Noun},
    {"family", PosTag::Noun}, {"front", PosTag::Noun},
    // direction particles and fillers
    {"left", PosTag::Other}, {"right", PosTag::Other},
    {"please", PosTag::Other}, {"ok", PosTag::Other}, {"okay", PosTag::Other},
    {"s", PosTag::Other}, {"t", PosTag::Other},
};

}  // namespace

Lexicons Lexicons::defaults() {
  Lexicons lex;
  lex.left_right_words_ = {"left", "right"};
  for (const char* w : kSpatialWords) lex.spatial_words_.insert(w);
  for (const char* w : kNumberWords) lex.number_words_.insert(w);
  for (const char* w : kObjectWords) lex.object_words_.insert(w);
  for (const auto& [word, tag] : kTagEntries) lex.tag_lexicon_[word] = tag;
  for (const auto& rule : kSuffixRules) lex.suffix_rules_.push_back(rule);
  lex.validate();
  return lex;
}

}  // namespace navprobe
