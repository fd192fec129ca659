// Copyright 2026 The Convoref Authors.
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

#include "lexicon_data.h"

namespace convoref::nlp::en {

const std::string_view kStopwords = R"(
a about above across after afterwards again against all almost alone along
already also although always am among amongst an and another any anybody
anyhow anyone anything anyway anywhere are aren't around as at be became
because become becomes been before beforehand behind being below beside
besides between beyond both but by can can't cannot could couldn't did
didn't do does doesn't doing don't done down during each either else
elsewhere enough etc even ever every everybody everyone everything
everywhere except few for from further had hadn't has hasn't have haven't
having he he'd he'll he's hence her here here's hereby herein hers herself
him himself his how how's however i i'd i'll i'm i've ie if in indeed into
is isn't it it'd it'll it's its itself just least less let let's many may
me meanwhile might mine more moreover most mostly much must mustn't my
myself namely neither never nevertheless no nobody none noone nor not
nothing now nowhere of off often oh ok okay on once one ones only onto or
other others otherwise ought our ours ourselves out over own per perhaps
please quite rather really same shall shan't she she'd she'll she's should
shouldn't since so some somebody somehow someone something sometime
sometimes somewhat somewhere soon still such than that that'll that's the
their theirs them themselves then thence there there's thereafter thereby
therefore therein these they they'd they'll they're they've this those
though through throughout thru thus to together too toward towards under
unless until up upon us very via was wasn't we we'd we'll we're we've well
were weren't what what's whatever when when's whence whenever where where's
whereas wherever whether which while whither who who's whoever whole whom
whose why why's will with within without won't would wouldn't yeah yes yet
you you'd you'll you're you've your yours yourself yourselves um uh uhm
hmm ah huh wow gonna wanna gotta kinda sorta thing things stuff lot lots
bit)";

const std::string_view kNumberWords = R"(
zero two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred hundreds thousand thousands
million millions billion billions trillion dozen dozens)";

const std::string_view kDateWords = R"(
january february april june july september october november december
monday tuesday wednesday thursday friday saturday sunday mondays tuesdays
wednesdays thursdays fridays saturdays sundays today tomorrow yesterday
tonight weekend weekends)";

const std::string_view kAmbiguousMonths = "may march august";

const std::string_view kDateModifiers = R"(
last next past coming previous upcoming early late earlier later recent)";

const std::string_view kTimeUnits = R"(
day days week weeks month months year years decade decades century
centuries summer winter spring autumn fall morning mornings afternoon
evening evenings night nights season semester quarter weekend)";

const std::string_view kVerbs = R"(
be being been get gets got gotten getting go goes went gone going make
makes made making know knows knew known knowing think thinks thought
thinking take takes took taken taking see sees saw seen seeing come comes
came coming want wants wanted wanting look looks looked looking use uses
used using find finds found finding give gives gave given giving tell
tells told telling work works worked working call calls called calling
try tries tried trying ask asks asked asking need needs needed needing
feel feels felt feeling become becomes became becoming leave leaves left
leaving put puts putting mean means meant meaning keep keeps kept keeping
begin begins began begun beginning seem seems seemed seeming help helps
helped helping talk talks talked talking turn turns turned turning start
starts started starting show shows showed shown showing hear hears heard
hearing play plays played playing run runs ran running move moves moved
moving like likes liked liking live lives lived living believe believes
believed believing hold holds held holding bring brings brought bringing
happen happens happened happening write writes wrote written writing
provide provides provided providing sit sits sat sitting stand stands
stood standing lose loses lost losing pay pays paid paying meet meets met
meeting include includes included including continue continues continued
continuing set sets setting learn learns learned learnt learning change
changes changed changing lead leads led leading understand understands
understood understanding watch watches watched watching follow follows
followed following stop stops stopped stopping create creates created
creating speak speaks spoke spoken speaking read reads reading allow
allows allowed allowing add adds added adding spend spends spent spending
grow grows grew grown growing open opens opened opening walk walks walked
walking win wins won winning offer offers offered offering remember
remembers remembered remembering love loves loved loving consider
considers considered considering appear appears appeared appearing buy
buys bought buying wait waits waited waiting serve serves served serving
die dies died dying send sends sent sending expect expects expected
expecting build builds built building stay stays stayed staying fall falls
fell fallen falling cut cuts cutting reach reaches reached reaching kill
kills killed killing remain remains remained remaining suggest suggests
suggested suggesting raise raises raised raising pass passes passed
passing sell sells sold selling require requires required requiring
report reports reported reporting decide decides decided deciding pull
pulls pulled pulling visit visits visited visiting fly flies flew flown
flying travel travels traveled travelled traveling travelling drive
drives drove driven driving eat eats ate eaten eating drink drinks drank
drunk drinking enjoy enjoys enjoyed enjoying hope hopes hoped hoping plan
plans planned planning study studies studied studying teach teaches taught
teaching join joins joined joining visit met say says said saying do does
did doing have has had having go went return returns returned returning
arrive arrives arrived arriving invite invites invited inviting hate hates
hated hating prefer prefers preferred preferring recommend recommends
recommended recommending agree agrees agreed agreeing explain explains
explained explaining check checks checked checking wonder wonders wondered
wondering guess guesses guessed guessing miss misses missed missing
celebrate celebrates celebrated celebrating cook cooks cooked cooking sing
sings sang sung singing dance dances danced dancing swim swims swam swum
swimming climb climbs climbed climbing hike hikes hiked hiking graduate
graduates graduated graduating move moved paint paints painted painting
invent invents invented inventing found founded founding acquire acquires
acquired acquiring launch launches launched launching announce announces
announced announcing release releases released releasing discover
discovers discovered discovering watch heard let lets letting carry
carries carried carrying break breaks broke broken breaking choose
chooses chose chosen choosing wear wears wore worn wearing catch catches
caught catching throw throws threw thrown throwing draw draws drew drawn
drawing forget forgets forgot forgotten forgetting imagine imagines
imagined imagining mention mentions mentioned mentioning share shares
shared sharing tried saw cost costs costing)";

const std::string_view kAdjectives = R"(
good better best bad worse worst new old young big small large little long
short high low great early late last next past first second third final
main major minor important different same other certain real true false
full empty free easy hard difficult simple possible impossible public
private local national international global social political economic
human natural modern ancient current recent common rare special general
whole entire huge tiny nice fine beautiful pretty ugly happy sad angry
glad sure clear dark light bright hot cold warm cool wet dry clean dirty
rich poor cheap expensive fast slow quick strong weak heavy soft loud
quiet busy famous popular favorite favourite amazing awesome wonderful
terrible horrible incredible interesting boring funny serious strange
weird crazy cute lovely delicious tasty fresh sweet sour spicy healthy
sick tired hungry thirsty ready open close closed late single double
huge deep wide narrow tall thin thick fat round flat red blue green
yellow orange purple pink brown black white gray grey golden silver
north south east west northern southern eastern western central upper
lower inner outer previous upcoming coming recent several various
available digital technical scientific medical legal financial cultural
historical traditional classical electronic mobile personal official
original primary secondary specific similar likely unlikely huge
favorite nearby foreign domestic urban rural smart clever brave calm
chinese japanese french german italian spanish english american british
european asian african australian canadian mexican indian korean russian
italian greek thai vietnamese brazilian dutch swiss irish scottish
annual daily weekly monthly yearly nuclear solar electric virtual
artificial quantum complex basic advanced key top)";

const std::string_view kNouns = R"(
time person people year way day man woman child children world life hand
part place case week company system program question work government number
night point home water room mother father area money story fact month
book eye job word business issue side kind head house service friend
family power hour game line end member law car city community name
president team minute idea kid body information school face others level
office door health art war history party result change morning reason
research girl guy moment air teacher force education foot feet boy age
policy music market sense nation plan college interest death experience
effect class control care field development role effort rate heart drug
show leader light voice wife husband police mind price report decision
son daughter view relationship town road arm difference value building
action model season society tax director position player record paper
space ground form event official matter center centre couple site project
activity star table need court oil situation cost industry figure street
image phone data picture practice piece land product doctor wall patient
worker news test movie film north south east west nature truth song
chance subject trip vacation holiday flight airport hotel restaurant
museum park beach mountain river lake island ocean sea country state
capital village station train bus plane ticket food dinner lunch
breakfast coffee tea pizza pasta burger sandwich salad soup bread cheese
wine beer cake fruit apple banana orange dessert meal weather rain snow
sun sky cloud wind storm temperature concert festival conference meeting
lecture class course degree university campus student professor research
science technology computer software hardware internet website app
network device phone camera screen keyboard robot machine engine
algorithm code language interaction design interface reality
experiment theory math mathematics physics chemistry biology medicine
hospital clinic disease virus vaccine animal dog cat bird fish horse
tree flower garden forest desert weekend birthday wedding party gift
dollar dollars euro euros pound pounds cent percent mile miles kilometer
kilometers meter meters inch inches foot pound ton gallon liter degree
degrees job career salary office boss colleague interview company
startup investor stock share economy election vote campaign senator
court judge lawyer crime prison army soldier battle peace treaty
painting painter artist gallery sculpture novel poem poet author writer
album band guitar piano drum singer actor actress director stage theater
theatre cinema television tv radio newspaper magazine article blog
podcast video photo photograph map calendar weather forecast shop store
mall supermarket bank church temple tower bridge castle palace stadium
library airport harbor harbour port coast valley hill border region
province county district neighborhood neighbourhood apartment building
kitchen bedroom bathroom garden car bike bicycle truck boat ship taxi
subway metro highway traffic journey adventure culture tradition
language accent dialect religion philosophy politics sport sports soccer
football basketball baseball tennis golf hockey match tournament league
championship olympics medal coach fan stadium ball goal score winner
dinosaur planet moon galaxy universe rocket satellite spacecraft
astronaut mission energy electricity battery fuel gas climate pollution
environment recycling plastic glass metal gold silver steel wood stone
rock sand ice fire smoke earthquake volcano hurricane flood drought
winter summer spring autumn holiday festival anniversary graduation
semester exam homework assignment lesson grade scholarship dream goal
plan future past memory problem solution answer example detail topic
theme chapter page letter email message text note list menu recipe
ingredient chef waiter customer client user owner manager employee staff
crew pilot captain driver passenger tourist traveler traveller guide
neighbor neighbour brother sister uncle aunt cousin grandmother
grandfather grandma grandpa baby parent parents friendship marriage
love hate fun joy fear hope anger surprise trust respect honor honour
success failure mistake luck skill talent hobby habit routine schedule
deadline budget cost price value quality quantity size shape color
colour style fashion clothes shirt dress shoe shoes hat jacket coat
glasses watch ring necklace bag wallet key keys window floor roof
chair desk bed sofa couch lamp clock mirror shower bath towel soap
toothbrush medicine pill vitamin diet exercise gym yoga workout
marathon race stadium court field track pool lake shore island peninsula
continent hemisphere equator pole statue monument landmark cathedral
mosque synagogue ruins pyramid wall empire kingdom republic dynasty
revolution independence constitution parliament congress senate
ministry agency organization organisation institution foundation charity
committee council union alliance federation association club society
group crowd audience population citizen immigrant refugee tourism
industry manufacturing agriculture farm farmer factory warehouse
shipping delivery package order payment invoice receipt contract deal
partnership merger acquisition profit revenue loss debt loan mortgage
rent tax insurance pension retirement inflation recession growth trade
export import tariff sanction embassy ambassador diplomat minister
spokesperson journalist reporter editor publisher headline interview
documentary series episode sequel trailer premiere award prize nominee
ceremony gala festival carnival parade exhibition fair expo summit
symposium workshop seminar webinar hackathon keynote panel presentation
slide demo prototype product feature update version release bug patch
server cloud database storage memory processor chip laptop tablet
smartphone headset glasses display sensor microphone speaker speech
transcript conversation discussion debate argument opinion thought
feeling emotion attention focus distraction notification reminder
question answer reference search result keyword category topic)";

const std::string_view kOtherWords = R"(
actually maybe probably definitely certainly basically literally
honestly seriously totally absolutely exactly finally recently usually
normally generally especially particularly almost nearly hello hi hey
thanks thank goodbye bye sorry right alright sure anyway instead also
ago away back forward here there everywhere somewhere pretty lately
tomorrow yesterday today again later earlier soon)";

const std::string_view kPersonTitles = R"(
mr mr. mrs mrs. ms ms. miss dr dr. prof prof. professor sir dame lord lady
president senator governor mayor king queen prince princess pope saint
captain general chancellor minister)";

const std::string_view kAbbreviations = R"(
mr mrs ms dr prof st jr sr mt ft)";

}  // namespace convoref::nlp::en
