// Copyright 2026-present the minrev project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Word lists for the rule-based tagger. The closed-class table is meant to
// be near-exhaustive for English function words; the open-class table covers
// frequent review vocabulary (product, body, health, office domains) and is
// extended at lookup time by inflection stripping, so plural/past/comparative
// forms do not need their own entries unless irregular.

#include <stdexcept>
#include <string>

#include "minrev/tagger.hpp"

namespace minrev {

namespace {

const char* const kPronouns[] = {
    "i", "me", "my", "mine", "myself", "we", "us", "our", "ours",
    "ourselves", "you", "your", "yours", "yourself", "yourselves", "he",
    "him", "his", "himself", "she", "her", "hers", "herself", "it", "its",
    "itself", "they", "them", "their", "theirs", "themselves", "who",
    "whom", "whose", "someone", "somebody", "something", "anyone",
    "anybody", "anything", "everyone", "everybody", "everything", "nobody",
    "nothing", "none", "i'm", "i've", "i'll", "i'd", "you're", "you've",
    "you'll", "you'd", "he's", "he'd", "he'll", "she's", "she'd", "she'll",
    "it's", "we're", "we've", "we'll", "we'd", "they're", "they've",
    "they'll", "they'd",
};

const char* const kDeterminers[] = {
    "the", "a", "an", "this", "that", "these", "those", "each", "every",
    "either", "neither", "some", "any", "no", "all", "both", "few",
    "several", "many", "much", "more", "most", "less", "least", "own",
    "such", "what", "which", "whatever", "whichever", "another", "other",
    "enough", "that's", "there's", "here's", "what's", "who's", "let's",
};

const char* const kPrepositions[] = {
    "of", "in", "on", "at", "by", "for", "with", "without", "about",
    "against", "between", "among", "into", "onto", "through", "throughout",
    "during", "before", "after", "above", "below", "under", "underneath",
    "over", "across", "around", "behind", "beside", "besides", "beyond",
    "despite", "down", "up", "off", "out", "outside", "inside", "near",
    "past", "per", "plus", "since", "than", "till", "until", "toward",
    "towards", "upon", "via", "within", "along", "amid", "atop", "except",
    "from", "to", "unlike",
};

const char* const kConjunctions[] = {
    "and", "but", "or", "nor", "yet", "because", "although", "though",
    "while", "whereas", "if", "unless", "whether", "when", "whenever",
    "where", "wherever",
};

const char* const kInterjections[] = {
    "oh", "wow", "hey", "hi", "hello", "hmm", "yeah", "yep", "nope", "ok",
    "okay", "please", "thanks", "yes",
};

const char* const kAuxiliaries[] = {
    "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "will", "would", "shall",
    "should", "can", "could", "may", "might", "must", "ought", "cannot",
    "won't", "can't", "don't", "doesn't", "didn't", "isn't", "aren't",
    "wasn't", "weren't", "haven't", "hasn't", "hadn't", "wouldn't",
    "couldn't", "shouldn't", "mustn't", "shan't", "ain't",
};

const char* const kFunctionAdverbs[] = {
    "not", "very", "too", "quite", "rather", "really", "just", "almost",
    "also", "always", "never", "often", "sometimes", "usually", "rarely",
    "seldom", "ever", "still", "already", "soon", "now", "then", "here",
    "there", "again", "once", "twice", "away", "far", "further", "perhaps",
    "maybe", "instead", "otherwise", "anyway", "anyhow", "meanwhile",
    "moreover", "furthermore", "however", "therefore", "thus", "hence",
    "indeed", "even", "else", "elsewhere", "everywhere", "somewhere",
    "anywhere", "nowhere", "together", "apart", "forever", "somewhat",
    "somehow", "anymore", "ahead", "abroad", "overnight", "altogether",
    "aside", "halfway", "nearby", "well", "so", "only",
};

const char* const kNumberWords[] = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand",
    "million", "billion", "first", "second", "third", "fourth", "fifth",
    "sixth", "seventh", "eighth", "ninth", "tenth", "half", "dozen",
};

const char* const kAdjectives[] = {
    "good", "great", "nice", "bad", "poor", "excellent", "amazing",
    "awesome", "terrible", "horrible", "awful", "fantastic", "wonderful",
    "perfect", "decent", "solid", "sturdy", "cheap", "expensive", "flimsy",
    "strong", "weak", "heavy", "light", "lightweight", "big", "large",
    "huge", "enormous", "tiny", "small", "little", "long", "short", "tall",
    "wide", "narrow", "thick", "thin", "deep", "shallow", "high", "low",
    "fast", "quick", "slow", "easy", "hard", "difficult", "simple",
    "complex", "comfy", "cozy", "soft", "firm", "smooth", "rough", "sharp",
    "dull", "bright", "dim", "dark", "clear", "clean", "dirty", "fresh",
    "stale", "new", "old", "modern", "vintage", "classic", "cute",
    "pretty", "beautiful", "gorgeous", "ugly", "plain", "fancy", "elegant",
    "stylish", "sleek", "cool", "warm", "hot", "cold", "mild", "quiet",
    "loud", "noisy", "silent", "happy", "sad", "angry", "upset", "glad",
    "unhappy", "fine", "real", "fake", "genuine", "authentic", "false",
    "true", "correct", "wrong", "right", "safe", "risky", "secure",
    "tight", "loose", "snug", "slim", "skinny", "broad", "compact",
    "handy", "smart", "dumb", "clever", "stupid", "silly", "crazy",
    "weird", "strange", "odd", "normal", "typical", "standard", "regular",
    "ordinary", "special", "unique", "rare", "common", "frequent",
    "popular", "favorite", "main", "primary", "extra", "spare", "double",
    "single", "triple", "dual", "giant", "mini", "jumbo", "grand",
    "average", "medium", "moderate", "superb", "superior", "inferior",
    "premium", "deluxe", "same", "different", "similar", "important",
    "major", "minor", "vast", "slight", "severe", "serious", "gentle",
    "harsh", "initial", "final", "last", "next", "previous", "prior",
    "early", "late", "recent", "current", "daily", "weekly", "monthly",
    "yearly", "annual", "better", "best", "worse", "worst", "black",
    "white", "red", "blue", "green", "yellow", "orange", "purple", "pink",
    "brown", "gray", "grey", "tan", "beige", "ivory", "navy", "teal",
    "maroon", "gold", "golden", "silver", "bronze", "copper",
    "transparent", "translucent", "opaque", "matte", "glossy", "shiny",
    "metallic", "wooden", "busy", "dusty", "rusty", "sticky", "slippery",
    "grippy", "bulky", "clunky", "squeaky", "wobbly", "shaky", "creaky",
    "bumpy", "lumpy", "fluffy", "fuzzy", "furry", "itchy", "scratchy",
    "stretchy", "roomy", "airy", "chilly", "sunny", "rainy", "windy",
    "greasy", "oily", "soapy", "watery", "chunky", "creamy", "crunchy",
    "chewy", "crispy", "juicy", "tasty", "yummy", "spicy", "salty",
    "sweet", "sour", "bitter", "minty", "fruity", "nutty", "smelly",
    "stinky", "messy", "tidy", "tricky", "picky", "fussy", "cranky",
    "grumpy", "moody", "lazy", "speedy", "flaky", "patchy", "spotty",
    "leaky", "wireless", "cordless", "useless", "harmless", "odorless",
    "stainless", "seamless", "effortless", "painless", "flawless", "sore",
    "achy", "arthritic", "allergic", "diabetic", "asthmatic", "dizzy",
    "sleepy", "drowsy", "groggy", "alert", "awake", "tired", "sick",
    "ill", "healthy", "unhealthy", "potent", "organic", "natural",
    "herbal", "synthetic", "chemical", "vegan", "vegetarian", "worth",
    "worthy", "necessary", "unnecessary", "optional", "essential",
    "critical", "crucial", "vital", "convenient", "inconvenient",
    "efficient", "inefficient", "flexible", "sensible", "edible",
    "possible", "impossible", "incredible", "waterproof", "windproof",
};

const char* const kNouns[] = {
    "woman", "women", "man", "men", "lady", "ladies", "gentleman",
    "gentlemen", "girl", "boy", "kid", "child", "children", "baby", "mom",
    "dad", "mother", "father", "sister", "brother", "son", "daughter",
    "husband", "wife", "spouse", "grandma", "grandpa", "grandmother",
    "grandfather", "grandson", "granddaughter", "aunt", "uncle", "cousin",
    "niece", "nephew", "friend", "neighbor", "person", "people", "family",
    "hand", "hands", "arm", "arms", "leg", "legs", "foot", "feet", "head",
    "neck", "shoulder", "shoulders", "knee", "knees", "hip", "hips",
    "wrist", "ankle", "elbow", "waist", "chest", "stomach", "belly",
    "muscle", "muscles", "joint", "joints", "bone", "bones", "spine",
    "skin", "hair", "eye", "eyes", "ear", "ears", "nose", "mouth",
    "throat", "tooth", "teeth", "gum", "gums", "face", "body", "back",
    "finger", "fingers", "thumb", "toe", "toes", "nail", "nails", "heel",
    "heels", "palm", "scalp", "jaw", "chin", "cheek", "forehead", "lip",
    "lips", "tongue", "heart", "lung", "lungs", "liver", "kidney", "pill",
    "pills", "vitamin", "vitamins", "supplement", "supplements",
    "medicine", "medication", "medications", "doctor", "nurse",
    "pharmacy", "prescription", "dose", "dosage", "tablet", "tablets",
    "capsule", "capsules", "bottle", "jar", "tube", "cream", "lotion",
    "soap", "shampoo", "conditioner", "toothpaste", "toothbrush", "brush",
    "razor", "blade", "bandage", "bandages", "thermometer", "pain",
    "ache", "aches", "arthritis", "diabetes", "asthma", "allergy",
    "allergies", "surgery", "injury", "symptom", "symptoms", "disease",
    "condition", "blood", "pressure", "cholesterol", "migraine",
    "headache", "headaches", "insomnia", "anxiety", "depression",
    "cancer", "stroke", "flu", "fever", "cough", "infection", "rash",
    "eczema", "acne", "wheelchair", "crutches", "cane", "walker",
    "glasses", "contacts", "lens", "lenses", "pen", "pens", "pencil",
    "pencils", "paper", "papers", "notebook", "notebooks", "binder",
    "binders", "folder", "folders", "file", "files", "stapler",
    "staplers", "staple", "staples", "tape", "glue", "scissors", "marker",
    "markers", "highlighter", "highlighters", "eraser", "ink", "toner",
    "cartridge", "cartridges", "printer", "printers", "scanner", "copier",
    "shredder", "laminator", "envelope", "envelopes", "stamp", "stamps",
    "label", "labels", "clip", "clips", "clipboard", "calculator",
    "keyboard", "mouse", "monitor", "desk", "desks", "drawer", "drawers",
    "shelf", "shelves", "cabinet", "organizer", "tray", "whiteboard",
    "chalk", "crayon", "crayons", "ruler", "rulers", "notepad", "planner",
    "calendar", "card", "cards", "sheet", "sheets", "page", "pages",
    "pad", "pads", "chair", "chairs", "table", "tables", "product",
    "products", "item", "items", "price", "prices", "quality", "box",
    "boxes", "package", "packaging", "day", "days", "week", "weeks",
    "month", "months", "year", "years", "time", "times", "thing",
    "things", "stuff", "way", "ways", "part", "parts", "piece", "pieces",
    "color", "colors", "size", "sizes", "brand", "brands", "company",
    "companies", "order", "orders", "problem", "problems", "issue",
    "issues", "review", "reviews", "star", "stars", "rating", "ratings",
    "money", "value", "cost", "deal", "deals", "shipping", "delivery",
    "seller", "customer", "service", "replacement", "refund", "warranty",
    "manual", "instructions", "assembly", "screw", "screws", "bolt",
    "bolts", "nut", "nuts", "tool", "tools", "kit", "home", "house",
    "room", "office", "kitchen", "bathroom", "bedroom", "garage", "yard",
    "floor", "wall", "walls", "ceiling", "door", "doors", "window",
    "windows", "corner", "edge", "side", "sides", "top", "bottom",
    "front", "surface", "area", "space", "spot", "lot", "bit", "pair",
    "couple", "gift", "bag", "bags", "purse", "wallet", "pocket",
    "pockets", "strap", "straps", "handle", "handles", "wheel", "wheels",
    "seat", "seats", "cushion", "cushions", "pillow", "pillows",
    "blanket", "mattress", "frame", "frames", "inch", "inches", "pound",
    "pounds", "ounce", "ounces", "gallon", "quart", "pint", "liter",
    "liters", "meter", "meters", "centimeter", "mile", "miles", "gram",
    "grams", "kilogram", "kilograms", "hour", "hours", "minute",
    "minutes", "battery", "batteries", "charger", "cable", "cord",
    "cords", "adapter", "outlet", "switch", "button", "buttons", "screen",
    "display", "speaker", "speakers", "headphones", "phone", "laptop",
    "computer", "device", "devices", "machine", "motor", "engine", "fan",
    "lamp", "bulb", "bulbs",
};

const char* const kVerbs[] = {
    "get", "gets", "got", "gotten", "getting", "buy", "buys", "buying",
    "bought", "purchase", "purchased", "purchasing", "receive", "receives",
    "received", "arrive", "arrives", "arrived", "come", "comes", "came",
    "coming", "go", "goes", "went", "gone", "going", "make", "makes",
    "made", "making", "take", "takes", "took", "taken", "taking", "give",
    "gives", "gave", "given", "use", "uses", "used", "using", "try",
    "tries", "tried", "trying", "work", "works", "worked", "working",
    "love", "loves", "loved", "loving", "like", "likes", "liked", "hate",
    "hates", "hated", "enjoy", "enjoys", "enjoyed", "prefer", "prefers",
    "preferred", "recommend", "recommends", "recommended", "suggest",
    "suggested", "return", "returned", "returns", "replace", "replaced",
    "send", "sends", "sent", "ship", "ships", "shipped", "deliver",
    "delivered", "open", "opens", "opened", "close", "closes", "closed",
    "fit", "fits", "feel", "feels", "felt", "seem", "seems", "seemed",
    "look", "looks", "looked", "sound", "sounds", "smell", "smells",
    "smelled", "taste", "tastes", "tasted", "think", "thinks", "thought",
    "know", "knows", "knew", "known", "believe", "believed", "guess",
    "hope", "hoped", "wish", "wished", "want", "wants", "wanted", "need",
    "needs", "needed", "expect", "expected", "plan", "planned", "decide",
    "decided", "choose", "chose", "chosen", "pick", "picked", "pay",
    "pays", "paid", "spend", "spent", "save", "saved", "waste", "wasted",
    "read", "reads", "write", "writes", "wrote", "written", "wash",
    "washed", "wipe", "wiped", "assemble", "assembled", "install",
    "installed", "attach", "attached", "remove", "removed", "adjust",
    "adjusted", "turn", "turned", "push", "pushed", "pull", "pulled",
    "lift", "lifted", "carry", "carried", "move", "moved", "store",
    "stored", "pack", "packed", "wrap", "wrapped", "seal", "sealed",
    "cut", "cuts", "drill", "mount", "mounted", "hang", "hung", "hold",
    "holds", "held", "keep", "keeps", "kept", "put", "puts", "set",
    "sets", "sit", "sits", "sat", "stand", "stands", "stood", "break",
    "breaks", "broke", "broken", "fix", "fixed", "repair", "repaired",
    "charge", "charged", "drain", "run", "runs", "ran", "stop", "stops",
    "start", "starts", "begin", "began", "begun", "finish", "finished",
    "continue", "help", "helps", "helped", "support", "manage", "solve",
    "solved", "cause", "caused", "create", "created", "build", "builds",
    "built", "design", "designed", "improve", "improved", "upgrade",
    "upgraded", "update", "updated", "connect", "connected", "press",
    "pressed", "click", "clicked", "fold", "folds", "folded", "bend",
    "bent", "twist", "twisted", "snap", "snapped", "crack", "cracked",
    "leak", "leaked", "spill", "spilled", "drop", "dropped", "fall",
    "falls", "fell", "fallen", "throw", "threw", "thrown", "catch",
    "caught", "miss", "missed", "lose", "loses", "lost", "wear", "wears",
    "wore", "worn", "tear", "tore", "torn", "stretch", "stretched",
    "shrink", "shrunk", "fade", "faded", "stain", "stained", "scratch",
    "scratched", "dent", "dented", "rust", "rusted", "rest", "rests",
    "rested", "stay", "stayed", "remain", "remained", "say", "says",
    "said", "tell", "told", "talk", "talked", "speak", "spoke", "ask",
    "asked", "answer", "answered", "call", "called", "email", "emailed",
    "contact", "contacted", "complain", "complained", "notice",
    "noticed", "realize", "realized", "learn", "learned", "forget",
    "forgot", "remember", "remembered", "see", "sees", "saw", "seen",
    "show", "showed", "shown", "appear", "appeared", "disappear",
    "disappeared", "happen", "happened", "occur", "occurred", "become",
    "became", "becomes", "hear", "heard", "listen", "listened", "watch",
    "watched", "play", "played", "stick", "stuck", "slip", "slipped",
    "slide", "slid", "roll", "rolled", "spin", "spun", "shake", "shook",
    "rattle", "rattled", "squeak", "squeaked", "wobble", "wobbled",
    "bother", "bothered", "hurt", "hurts", "swell", "swelled", "swollen",
    "heal", "healed", "cure", "cured", "treat", "treated", "prevent",
    "prevented", "reduce", "reduced", "relieve", "relieved", "ease",
    "eased", "describe", "described", "match", "matched", "compare",
    "compared", "differ", "differed", "vary", "varied", "depend",
    "depends", "depended", "include", "includes", "included", "contain",
    "contains", "contained", "require", "requires", "required", "derive",
    "derives", "revive", "revived", "survive", "survived", "forgive",
    "forgave", "forgiven",
};

void add_all(TaggerLexicon& lex,
             std::unordered_map<std::string, PosTag>& map,
             const char* const* words, size_t n, PosTag tag) {
    for (size_t i = 0; i < n; ++i) {
        std::string w = words[i];
        if (lex.closed.count(w) || lex.open.count(w)) {
            throw std::logic_error("duplicate tagger lexicon entry: " + w);
        }
        map.emplace(std::move(w), tag);
    }
}

template <size_t N>
void add_all(TaggerLexicon& lex,
             std::unordered_map<std::string, PosTag>& map,
             const char* const (&words)[N], PosTag tag) {
    add_all(lex, map, words, N, tag);
}

TaggerLexicon build_lexicon() {
    TaggerLexicon lex;
    add_all(lex, lex.closed, kPronouns, PosTag::Pronoun);
    add_all(lex, lex.closed, kDeterminers, PosTag::Other);
    add_all(lex, lex.closed, kPrepositions, PosTag::Other);
    add_all(lex, lex.closed, kConjunctions, PosTag::Other);
    add_all(lex, lex.closed, kInterjections, PosTag::Other);
    add_all(lex, lex.closed, kAuxiliaries, PosTag::Verb);
    add_all(lex, lex.closed, kFunctionAdverbs, PosTag::Adverb);
    add_all(lex, lex.closed, kNumberWords, PosTag::Numeral);
    add_all(lex, lex.open, kAdjectives, PosTag::Adjective);
    add_all(lex, lex.open, kNouns, PosTag::Noun);
    add_all(lex, lex.open, kVerbs, PosTag::Verb);
    return lex;
}

}  // namespace

const TaggerLexicon& tagger_lexicon() {
    static const TaggerLexicon lex = build_lexicon();
    return lex;
}

}  // namespace minrev
