pub const DIGAMMA_REF: &[(f64, f64)] = &[
    (0.05, -20.49784499129987),
    (0.06414374168661295, -16.066365536061955),
    (0.08228839195117858, -12.601819514030622),
    (0.1055657071424632, -9.888579505493071),
    (0.13542758899821583, -7.758132136482288),
    (0.17373664571884695, -6.078683297748643),
    (0.2228823704897662, -4.747091480331391),
    (0.2859301839839106, -3.6826266188524466),
    (0.3668126372373936, -2.8221569068080656),
    (0.47057470100681287, -2.1164428778879163),
    (0.6036884413127228, -1.5272746439931328),
    (0.774456708775146, -1.0252340036243608),
    (0.9935310215027481, -0.5879073061304843),
    (1.2745759440181796, -0.1984222435286971),
    (1.6351214022614595, 0.15577071355132843),
    (2.0976560970582288, 0.4839125778834137),
    (2.691030216741035, 0.7927638277625766),
    (3.4522549418701405, 1.0872590696649196),
    (4.428810984553027, 1.3710066025117256),
    (5.681610155440071, 1.646657809015295),
    (7.288794683491696, 1.9161740906770637),
    (9.350611267692985, 2.1810172609854606),
    (11.995663875336628, 2.4422847916525616),
    (15.388935299580545, 2.7008061500027583),
    (19.742077813765885, 2.957211915048941),
    (25.326614792864234, 3.211983836779904),
    (32.49087674139668, 3.46549146667663),
    (41.6817280974346, 3.718019231223956),
    (53.47244000266965, 3.969786626142416),
    (68.59844757768303, 4.220963401262994),
    (88.00322203051122, 4.471681057543184),
    (112.89711883029518, 4.722041602113675),
    (144.83287254826604, 4.972124246936353),
    (185.8024472893223, 5.221990553834555),
    (238.3612836733362, 5.471688398488836),
    (305.78769216063904, 5.721255032073205),
    (392.2873347379511, 5.970719450601735),
    (503.25554932722065, 6.220104231382178),
    (645.6138791679949, 6.4694269581798896),
    (828.2417978928804, 6.718701328273308),
    (1062.5305587619364, 6.967938013058165),
    (1363.0937139071639, 7.21714532746311),
    (1748.6786215901404, 7.466329750893009),
    (2243.3357959236077, 7.7154963327778425),
    (2877.9190362011236, 7.9646490083781565),
    (3692.0099050614203, 8.213790844760974),
    (4736.3865930935235, 8.462924232419834),
    (6076.191163106556, 8.712051034570772),
    (7794.992728095746, 8.961172703484856),
    (10000.0, 9.210290371142849),
];

pub const TRIGAMMA_REF: &[(f64, f64)] = &[
    (0.05, 401.5323573421151),
    (0.06414374168661295, 244.55071648860454),
    (0.08228839195117858, 149.14738734622827),
    (0.1055657071424632, 91.15644011330284),
    (0.13542758899821583, 55.89382156522144),
    (0.17373664571884695, 34.43701812362226),
    (0.2228823704897662, 21.364607822117236),
    (0.2859301839839106, 13.382864178990543),
    (0.3668126372373936, 8.491313830292858),
    (0.47057470100681287, 5.47569968036175),
    (0.6036884413127228, 3.599782245520138),
    (0.774456708775146, 2.4178643172844816),
    (0.9935310215027481, 1.6606232373355698),
    (1.2745759440181796, 1.1655186308865388),
    (1.6351214022614595, 0.8343885602227425),
    (2.0976560970582288, 0.607695068217374),
    (2.691030216741035, 0.44898608147071595),
    (3.4522549418701405, 0.3356053516876664),
    (4.428810984553027, 0.2531854725391765),
    (5.681610155440071, 0.19239879673153856),
    (7.288794683491696, 0.14703719934484316),
    (9.350611267692985, 0.1128668795822122),
    (11.995663875336628, 0.08693461081591392),
    (15.388935299580545, 0.06713876141773682),
    (19.742077813765885, 0.051957753909125215),
    (25.326614792864234, 0.040273910995251766),
    (32.49087674139668, 0.03125636753494687),
    (41.6817280974346, 0.024281420892755184),
    (53.47244000266965, 0.018877180402250816),
    (68.59844757768303, 0.014684358705391864),
    (88.00322203051122, 0.011428026234240501),
    (112.89711883029518, 0.008896966525192977),
    (144.83287254826604, 0.006928400870512555),
    (185.8024472893223, 0.005396569703895467),
    (238.3612836733362, 0.004204124822975874),
    (305.78769216063904, 0.0032755958774394597),
    (392.2873347379511, 0.0025524037365129057),
    (503.25554932722065, 0.001989037558410289),
    (645.6138791679949, 0.001550113603279019),
    (828.2417978928804, 0.0012081060554377824),
    (1062.5305587619364, 0.00094159242205115),
    (1363.0937139071639, 0.0007338944433033801),
    (1748.6786215901404, 0.0005720239112767495),
    (2243.3357959236077, 0.0004458641088443853),
    (2877.9190362011236, 0.00034753366727401195),
    (3692.0099050614203, 0.0002708918625719255),
    (4736.3865930935235, 0.00021115370409055772),
    (6076.191163106556, 0.00016459032740419823),
    (7794.992728095746, 0.00012829571256430674),
    (10000.0, 0.00010000500016666666),
];

pub const LN_GAMMA_REF: &[(f64, f64)] = &[
    (0.001, 6.907178885383853),
    (0.0015264179671752333, 6.483952328914544),
    (0.0023299518105153716, 6.060567268963607),
    (0.0035564803062231283, 5.636941430101019),
    (0.005428675439323859, 5.212950766774621),
    (0.008286427728546842, 4.788409508024232),
    (0.012648552168552964, 4.363042360129057),
    (0.019306977288832506, 3.936448176781084),
    (0.029470517025518114, 3.5080583600090978),
    (0.04498432668969446, 3.0771044202161586),
    (0.06866488450043001, 2.6426367232285046),
    (0.10481131341546863, 2.203698856473706),
    (0.1599858719606059, 1.7598921134584595),
    (0.2442053094548652, 1.3128123071307032),
    (0.3727593720314942, 0.8692652306844026),
    (0.5689866029018299, 0.4478138391547869),
    (0.8685113737513529, 0.0911180549203329),
    (1.3257113655901096, -0.11215337738356806),
    (2.0235896477251574, 0.01015189942419214),
    (3.088843596477482, 0.7766715937479987),
    (4.714866363457395, 2.7578005691848797),
    (7.196856730011521, 6.950867072142914),
    (10.985411419875595, 15.070113973650596),
    (16.7683293681101, 30.024001965812403),
    (25.595479226995383, 56.69669185255656),
    (39.06939937054621, 103.22161645709043),
    (59.636233165946486, 183.04859614564467),
    (91.02981779915227, 318.2869843004304),
    (138.9495494373139, 545.0954216888474),
    (212.09508879201925, 922.3464769560384),
    (323.7457542817647, 1545.5204862975493),
    (494.17133613238383, 2568.932959666496),
    (754.3120063354622, 4241.219220384368),
    (1151.3953993264481, 6961.87439755569),
    (1757.510624854793, 11371.183242943456),
    (2682.6957952797275, 18493.025647582166),
    (4094.9150623804276, 29961.306313414243),
    (6250.551925273976, 48378.4774185276),
    (9540.954763499944, 77882.47926886358),
    (14563.484775012445, 125042.17655900512),
    (22229.964825261955, 200270.0339678612),
    (33932.217718953296, 320048.45964355255),
    (51794.74679231213, 510435.0005343264),
    (79060.43210907701, 812575.8556181773),
    (120679.26406393314, 1291370.7910072284),
    (184206.99693267164, 2049079.4840147705),
    (281176.86979742366, 3246670.624622909),
    (429193.42601287784, 5137295.093615374),
    (655128.5568595523, 8118731.706001228),
    (1000000.0, 12815504.569147611),
];

