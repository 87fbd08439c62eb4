window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#quick-start","series.html#exact-truncated-series","series.html#division","series.html#composition","series.html#cap-discipline","umbral.html#series-acting-on-polynomials","umbral.html#appell-sequences","umbral.html#connection-coefficients","families.html#the-polynomial-families","families.html#scalar-families","families.html#the-polylogarithm-series","families.html#poly-bernoulli-polynomials","families.html#barnes-multiple-bernoulli-polynomials","families.html#mixed-type-polynomials","families.html#frobenius-euler-and-higher-order-bernoulli-polynomials","families.html#factorial-bases","identities.html#the-identity-suites","identities.html#the-suites","identities.html#running-a-sweep","cli.html#the-command-line","cli.html#umbral-mix-table","cli.html#umbral-mix-verify"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":10,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1},"4":{"docs":{"1":{"tf":1.0}},"df":1},"=":{"docs":{"18":{"tf":1.0}},"df":1}}}},"1":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":2.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":2.23606797749979},"15":{"tf":2.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":2.449489742783178},"3":{"tf":2.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":2.0}},"df":20,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}},")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"/":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,"^":{"docs":{"15":{"tf":1.0}},"df":1}}}}},",":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"df":2}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"=":{"docs":{},"df":0,"6":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1,";":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"2":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}},"*":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"6":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}},"0":{"docs":{"19":{"tf":1.0},"4":{"tf":1.0}},"df":2},";":{"docs":{},"df":0,"n":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"r":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}},"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"|":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"|":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}},"2":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":12,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"=":{"docs":{},"df":0,"3":{"docs":{"19":{"tf":1.0}},"df":1}}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}}}}}},"3":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":4,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"0":{"docs":{"3":{"tf":1.0}},"df":1}},"4":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"2":{"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2}},"5":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":4},"6":{"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5},"7":{"docs":{"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"8":{"docs":{"11":{"tf":2.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3},"9":{"docs":{"7":{"tf":1.7320508075688772}},"df":1,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1},"2":{"docs":{"1":{"tf":1.0}},"df":1},"j":{"docs":{"0":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":4}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":17}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}},"k":{"docs":{"5":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":6,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"[":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1},"3":{"docs":{"10":{"tf":1.0}},"df":1},"6":{"docs":{"10":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"[":{"docs":{},"df":0,"4":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"2":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1},"5":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1},"2":{"docs":{"3":{"tf":1.0}},"df":1},"4":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1},"1":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}},"2":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"10":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"b":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"7":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2},"2":{"docs":{"3":{"tf":1.0}},"df":1},"4":{"docs":{"3":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}},"d":{"docs":{"22":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":6,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3},"i":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":4}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.0},"21":{"tf":1.7320508075688772},"3":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":9,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}}}}},".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1},"t":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"c":{"docs":{"8":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"n":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"p":{"docs":{"11":{"tf":1.0},"2":{"tf":2.23606797749979},"3":{"tf":1.4142135623730951},"4":{"tf":2.23606797749979},"5":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":6,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":9}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":5}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":2.0},"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":8,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":2.0}},"df":1}}},"d":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"x":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":9}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"s":{"docs":{"21":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1},"s":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6},"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1},"j":{"docs":{"13":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"y":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"g":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}},"t":{"docs":{"21":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1},"s":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.23606797749979}},"df":5}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"20":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"f":{"docs":{"6":{"tf":1.7320508075688772}},"df":1,"(":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":7}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":3,"u":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":2.23606797749979},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":9},"y":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"n":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"1":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"2":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"’":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"r":{"docs":{"2":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"x":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"n":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":17},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}},"df":3},"t":{"docs":{"21":{"tf":1.7320508075688772}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{"6":{"tf":1.0},"7":{"tf":2.0},"8":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{"20":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":2.6457513110645907},"22":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"h":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":12,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"1":{"docs":{},"df":0,"a":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1},"s":{"docs":{"21":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"x":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}},"df":5,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"l":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":4,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1},"t":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{"18":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":9}}}},"y":{"docs":{"1":{"tf":2.0},"14":{"tf":2.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"=":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}}},"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"^":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":4,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{"15":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"h":{"docs":{"22":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0}},"df":3},"z":{"docs":{"0":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":2.6457513110645907}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"g":{"docs":{"4":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}}}}},"m":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":2.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":6,"^":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":17}},"k":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"p":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}},"x":{"docs":{"22":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1},"x":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.7320508075688772}},"df":7,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"=":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1},"6":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0}},"df":3},"2":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":8,"=":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.7320508075688772}},"df":1}},"g":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1,"e":{"docs":{"21":{"tf":1.4142135623730951}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"m":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.6457513110645907},"21":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":9},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"5":{"tf":1.0}},"df":10}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"18":{"tf":3.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}}},"p":{"docs":{"20":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}},".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"q":{"docs":{"20":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":5}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}},"m":{"docs":{"13":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":8}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"y":{"docs":{"2":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.7320508075688772}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":4}},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"u":{"docs":{"18":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}},"l":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1},"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":4},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":2.449489742783178},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":2.0},"21":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":11,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"3":{"docs":{"6":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"5":{"docs":{"15":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{"13":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1,"t":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}}}}}}}},"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951}},"df":7,"+":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}},".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"_":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"t":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4},"1":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}},"df":12,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"2":{"docs":{"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"4":{"docs":{"16":{"tf":1.0}},"df":1}},"3":{"docs":{"6":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"4":{"docs":{"12":{"tf":1.0}},"df":1},"6":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2},"7":{"docs":{"10":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"2":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":9,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5},"4":{"docs":{"2":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772}},"df":5}}}}},"e":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"21":{"tf":1.0},"3":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":3}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":3}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"h":{"docs":{"22":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"w":{"docs":{"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{"22":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"5":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"s":{"docs":{"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":4,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}}},"n":{"docs":{"18":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"7":{"tf":1.0}},"df":3,"+":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"q":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":3,"[":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":2.0},"9":{"tf":1.0}},"df":4}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":2.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5},"2":{"docs":{"2":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":6},"2":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1},"4":{"docs":{"3":{"tf":1.0}},"df":1},"7":{"docs":{"3":{"tf":1.0}},"df":1},"8":{"docs":{"11":{"tf":1.0}},"df":1},"9":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}},"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"8":{"tf":1.0}},"df":2,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"18":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":2.0},"3":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"_":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.7320508075688772}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":5,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{"3":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"m":{"docs":{"18":{"tf":1.0},"4":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2},"k":{"docs":{"6":{"tf":1.0}},"df":1},"m":{"docs":{"8":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,">":{"docs":{},"df":0,"=":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"0":{"tf":2.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":2.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":10,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"1":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2},"2":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2},"3":{"docs":{"18":{"tf":1.4142135623730951}},"df":1},"4":{"docs":{"18":{"tf":1.0}},"df":1},"5":{"docs":{"18":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2},"6":{"docs":{"18":{"tf":1.4142135623730951}},"df":1},"7":{"docs":{"18":{"tf":1.4142135623730951}},"df":1},"8":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":3},"9":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":3},"^":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1},"3":{"docs":{"2":{"tf":1.0}},"df":1},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{"3":{"tf":1.0}},"df":1,"]":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{"7":{"tf":1.0}},"df":1,"]":{"docs":{},"df":0,"f":{"docs":{"6":{"tf":1.0}},"df":1}}},"m":{"docs":{"3":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2},"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":3}},"k":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":2.23606797749979}},"df":1}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":3}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":10}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"u":{"docs":{"4":{"tf":1.7320508075688772}},"df":1,"^":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772}},"df":6,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":9}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":7}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}},"t":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3},"s":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"13":{"tf":1.7320508075688772},"14":{"tf":2.449489742783178},"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":2.0},"3":{"tf":2.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772},"7":{"tf":2.449489742783178},"8":{"tf":2.0}},"df":18,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2},"2":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":4},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"22":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951}},"df":2}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}},"df":7,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}}}},"2":{"docs":{"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"7":{"tf":1.0}},"df":3},"j":{"docs":{"7":{"tf":1.0}},"df":1},"n":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"y":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"z":{"docs":{},"df":0,"^":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":6}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":3}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"umbral-mix is an exact-arithmetic library and command-line tool for the mixed-type polynomials S_n(x | a_1, ..., a_r; k) defined by the\\ngenerating function t^r Li_k(1 - e^{-t})\\n--------------------- ------------------ e^{xt} = sum_n S_n(x) t^n / n!\\n(e^{a_1 t}-1)...(e^{a_r t}-1) 1 - e^{-t} where r >= 1, the a_j are nonzero rationals, k is any integer, and Li_k(z) = sum_{m>=1} z^m / m^k is the polylogarithm. This family blends the\\nBarnes multiple Bernoulli polynomials (the first factor) with the\\npoly-Bernoulli polynomials (the second factor), and a web of identities\\nconnects it to both parents, to Stirling numbers, to factorial bases, and to\\nFrobenius-Euler and higher-order Bernoulli polynomials. Everything here is computed over arbitrary-precision rationals. There are no\\nfloats anywhere: a claimed identity either holds coefficient for coefficient\\nor the library tells you the first coefficient where it breaks. The crate has three layers: Series: truncated formal power series over the rationals,\\nwith exact division and composition. These carry the generating functions. umbral operations: series acting on polynomials as linear\\nfunctionals and as differential operators, Appell sequence generation, and\\nconnection coefficients between polynomial bases. families and identities: generators for\\nevery named family, and verifiers that recompute both sides of each\\nidentity through disjoint code paths.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse umbral_mix::families::{mixed_sequence, BarnesParams, MixedFamilyKey}; // S_n(x | 1, 2; k = -1): two Barnes parameters, negative polylog order\\nlet key = MixedFamilyKey::new(BarnesParams::from_ints(&[1, 2]).unwrap(), -1);\\nlet seq = mixed_sequence(2, &key); // the constant member is 1/(a_1 a_2)\\nassert_eq!(seq[0].to_string(), \\"1/2\\");\\nassert_eq!(seq[2].to_string(), \\"-1/12 + 1/2*x + 1/2*x^2\\"); } Identity checks compare a directly generated polynomial against a\\nreconstruction from other families: #![allow(unused)] fn main() {\\nuse umbral_mix::families::{BarnesParams, MixedFamilyKey};\\nuse umbral_mix::identities::verify_falling; let key = MixedFamilyKey::new(BarnesParams::from_ints(&[1, 2]).unwrap(), 2);\\nlet report = verify_falling(6, &key); // expansion over falling factorials\\nassert!(report.equal); } The same checks are reachable from the shell: $ umbral-mix verify --suite all\\n$ umbral-mix table --family mixed --n 0..4 --r 2 --k -1 --a 1,2 Every code sample in this guide is compiled and executed by cargo test, so\\nthe book cannot drift from the library.","breadcrumbs":"Introduction » Quick start","id":"1","title":"Quick start"},"10":{"body":"#![allow(unused)] fn main() {\\nuse umbral_mix::families::{bernoulli_numbers, stirling2, stirling2_row};\\nuse umbral_mix::rational::{rat, ratio}; // t/(e^t - 1) convention: B_1 = -1/2, odd numbers beyond it vanish\\nlet b = bernoulli_numbers(6);\\nassert_eq!(b[1], ratio(-1, 2));\\nassert_eq!(b[3], rat(0));\\nassert_eq!(b[6], ratio(1, 42)); // second-kind Stirling triangle\\nassert_eq!(stirling2(4, 2), rat(7));\\nassert_eq!(stirling2_row(4), vec![rat(0), rat(1), rat(7), rat(6), rat(1)]); }","breadcrumbs":"The polynomial families » Scalar families","id":"10","title":"Scalar families"},"11":{"body":"polylog_series(k, cap) is Li_k(1 - e^{-t}), defined for every integer k: for k <= 0 the coefficient 1/m^k is just the integer m^(-k).\\nTwo orders collapse to closed forms and pin the conventions: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::families::polylog_series;\\nuse umbral_mix::rational::rat; assert_eq!(polylog_series(1, 8), Series::monomial(1, rat(1), 8)); // = t\\nassert_eq!(polylog_series(0, 8), Series::exp_scaled(&rat(1), 8) - Series::one(8)); // = e^t - 1 }","breadcrumbs":"The polynomial families » The polylogarithm series","id":"11","title":"The polylogarithm series"},"12":{"body":"Appell kernel (1 - e^{-t}) / Li_k(1 - e^{-t}). At k = 1 the kernel\\nreduces to (e^t - 1)/t shifted, so the polynomials are the classical\\nBernoulli polynomials evaluated at x + 1: #![allow(unused)] fn main() {\\nuse umbral_mix::Polynomial;\\nuse umbral_mix::families::{higher_bernoulli_poly, poly_bernoulli_poly};\\nuse umbral_mix::rational::{rat, ratio}; assert_eq!( poly_bernoulli_poly(4, 1), higher_bernoulli_poly(4, 1).shift(&rat(1))\\n);\\n// degree one: x + 2^{-k}\\nassert_eq!(poly_bernoulli_poly(1, -2).coeffs(), &[rat(4), rat(1)]);\\nassert_eq!(poly_bernoulli_poly(1, 2).coeffs(), &[ratio(1, 4), rat(1)]); }","breadcrumbs":"The polynomial families » Poly-Bernoulli polynomials","id":"12","title":"Poly-Bernoulli polynomials"},"13":{"body":"Appell kernel prod_j (e^{a_j t} - 1) / t^r for nonzero rational\\nparameters. One unit parameter reproduces the classical polynomials; the\\nconstant member is the reciprocal of the parameter product. Zero parameters\\nand the empty product ( r = 0) are rejected at construction: #![allow(unused)] fn main() {\\nuse umbral_mix::Polynomial;\\nuse umbral_mix::families::{barnes_bernoulli_poly, BarnesParams};\\nuse umbral_mix::rational::{rat, ratio}; let params = BarnesParams::new(vec![ratio(1, 2), rat(3)]).unwrap();\\nassert_eq!( barnes_bernoulli_poly(0, &params), Polynomial::constant(ratio(2, 3))\\n);\\nassert!(BarnesParams::new(vec![]).is_err());\\nassert!(BarnesParams::new(vec![rat(0)]).is_err()); }","breadcrumbs":"The polynomial families » Barnes multiple Bernoulli polynomials","id":"13","title":"Barnes multiple Bernoulli polynomials"},"14":{"body":"The central family: its kernel is the product of the Barnes and\\npoly-Bernoulli kernels, indexed by a MixedFamilyKey. Like every Appell\\nsequence it differentiates downward, which is the quickest smoke test: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::families::{mixed_sequence, BarnesParams, MixedFamilyKey};\\nuse umbral_mix::rational::rat;\\nuse umbral_mix::umbral::operator_apply; let key = MixedFamilyKey::new(BarnesParams::from_ints(&[1, 2]).unwrap(), -1);\\nlet seq = mixed_sequence(6, &key);\\nlet t = Series::monomial(1, rat(1), 6);\\nfor n in 1..=6 { assert_eq!( operator_apply(&t, &seq[n]).unwrap(), seq[n - 1].scale(&rat(n as i64)) );\\n} } The key also knows how to extend itself with an extra unit parameter: the\\nrecurrence identities relate the (r, k) family to (r+1, k) and (r+1, k-1) with a extended by 1: #![allow(unused)] fn main() {\\nuse umbral_mix::families::{BarnesParams, MixedFamilyKey};\\nuse umbral_mix::rational::rat; let key = MixedFamilyKey::new(BarnesParams::from_ints(&[2]).unwrap(), 1);\\nlet extended = key.extended(-1);\\nassert_eq!(extended.params.a(), &[rat(2), rat(1)]);\\nassert_eq!(extended.k, 0); }","breadcrumbs":"The polynomial families » Mixed-type polynomials","id":"14","title":"Mixed-type polynomials"},"15":{"body":"The expansion bases of the last two identity suites: Appell kernels ((e^t - lambda)/(1 - lambda))^s (with lambda != 1) and ((e^t - 1)/t)^s. Order zero degenerates to plain monomials in both cases. #![allow(unused)] fn main() {\\nuse umbral_mix::Polynomial;\\nuse umbral_mix::families::{frobenius_euler_poly, higher_bernoulli_poly};\\nuse umbral_mix::rational::{rat, ratio}; assert_eq!(frobenius_euler_poly(5, 0, &rat(2)).unwrap(), Polynomial::x_pow(5));\\nassert_eq!(higher_bernoulli_poly(5, 0), Polynomial::x_pow(5)); // H^(1)_1(x | lambda) = x - 1/(1 - lambda)\\nassert_eq!( frobenius_euler_poly(1, 1, &rat(-1)).unwrap().coeffs(), &[ratio(-1, 2), rat(1)]\\n);\\n// order-s Bernoulli at degree one: x - s/2\\nassert_eq!(higher_bernoulli_poly(1, 3).coeffs(), &[ratio(-3, 2), rat(1)]); assert!(frobenius_euler_poly(1, 1, &rat(1)).is_err()); }","breadcrumbs":"The polynomial families » Frobenius-Euler and higher-order Bernoulli polynomials","id":"15","title":"Frobenius-Euler and higher-order Bernoulli polynomials"},"16":{"body":"Falling and rising factorials are built by direct product expansion, not\\nthrough their Sheffer descriptors, so the factorial-basis identity checks\\ncompare two genuinely independent constructions. #![allow(unused)] fn main() {\\nuse umbral_mix::families::{falling_factorial, rising_factorial};\\nuse umbral_mix::rational::rat; assert_eq!(falling_factorial(2).coeffs(), &[rat(0), rat(-1), rat(1)]); // x^2 - x\\nassert_eq!(rising_factorial(2).coeffs(), &[rat(0), rat(1), rat(1)]); // x^2 + x\\nassert_eq!(falling_factorial(4).eval(&rat(4)), rat(24)); // 4! }","breadcrumbs":"The polynomial families » Factorial bases","id":"16","title":"Factorial bases"},"17":{"body":"umbral_mix::identities turns each known identity of the mixed-type family\\ninto an executable check. A verifier generates the left side directly and\\nreassembles the right side from other ingredients (lower-degree members,\\nparent families, Bernoulli and Stirling numbers, factorial bases), so the\\ntwo sides travel disjoint code paths. The result is an IdentityReport: #![allow(unused)] fn main() {\\nuse umbral_mix::families::{BarnesParams, MixedFamilyKey};\\nuse umbral_mix::identities::{verify_explicit, IdentityId, Side}; let key = MixedFamilyKey::new(BarnesParams::from_ints(&[1, 2]).unwrap(), -1);\\nlet reports = verify_explicit(3, &key); // the five explicit expansions assert_eq!(reports.len(), 5);\\nassert_eq!(reports[0].id, IdentityId::T1a);\\nfor r in &reports { assert!(r.equal); assert!(r.first_diff.is_none()); assert!(matches!(r.lhs, Side::Poly(_)));\\n} } equal means exact coefficientwise identity; there is no tolerance to\\ntune. When a check fails, first_diff carries the first differing\\ncoefficient index together with both values.","breadcrumbs":"The identity suites » The identity suites","id":"17","title":"The identity suites"},"18":{"body":"suite checks t1 five explicit expansions of S_n: over poly-Bernoulli polynomials, over Barnes polynomials, over shifted monomials (x-j)^l, over monomials with Stirling weights, and over monomials with the family’s own numbers t2 binomial shift rule S_n(x+y) = sum_j C(n,j) S_j(x) y^(n-j) t3 degree-raising recurrence for S_(n+1), using Bernoulli numbers and the (r+1)-parameter families t4 degree-lowering relation for S_n, plus the equivalence of its re-indexed form with the t3 recurrence t5 scalar relation between mixed numbers, poly-Bernoulli numbers of order k-1, and Barnes numbers t6 expansion over falling factorials with Stirling-weighted number coefficients t7 expansion over rising factorials, sampling lower members at -m t8 expansion over order- s Frobenius-Euler polynomials, sampling at the integers 0..=s t9 expansion over order- s higher-order Bernoulli polynomials The factorial-basis coefficient formulas of t6/ t7 are additionally\\ncross-checked against connection_coefficients, which reaches the same\\nnumbers through the umbral pairing instead of through Stirling sums.","breadcrumbs":"The identity suites » The suites","id":"18","title":"The suites"},"19":{"body":"A Grid fixes the parameter ranges. The default grid covers degrees up to\\n10 (8 for t8/ t9), one to three Barnes parameters from four fixed sets\\n(with a repeated value and a non-integer on purpose), polylogarithm orders -2..=3, basis orders up to 3, and three values of lambda. Negative k is\\ndeliberately part of the default: it exercises the integer-multiplier branch\\nof the polylogarithm. #![allow(unused)] fn main() {\\nuse umbral_mix::identities::{run_suite, Grid, Suite};\\nuse umbral_mix::rational::rat; let grid = Grid { max_n: 4, r_values: vec![1], k_values: vec![-1, 0], a_sets: vec![vec![rat(1)], vec![rat(2)]], ..Grid::default()\\n};\\nlet reports = run_suite(Suite::T5, &grid, 1).unwrap(); assert_eq!(reports.len(), 2 * 2 * 5); // keys x degrees\\nassert!(reports.iter().all(|r| r.equal)); } Reports come back sorted by identity label and grid point, independent of\\nthe worker count, so output is reproducible under parallelism. The jobs\\nargument bounds the worker pool ( 1 = inline, 0 = one worker per core).","breadcrumbs":"The identity suites » Running a sweep","id":"19","title":"Running a sweep"},"2":{"body":"A Series stores the coefficients of t^0 .. t^cap of a formal power\\nseries, each an arbitrary-precision rational. The cap is a knowledge\\nhorizon, not a degree: coefficients above it are unknown, and every\\noperation keeps track of how far its result can be trusted. #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::{rat, ratio}; let e = Series::exp_scaled(&rat(2), 3); // e^{2t} up to t^3\\nassert_eq!(e.coeffs(), &[rat(1), rat(2), rat(2), ratio(4, 3)]);\\nassert_eq!(e.cap(), 3); } Addition, subtraction and multiplication truncate to the smaller cap of the\\ntwo operands. Multiplication is the plain Cauchy product; the degrees in\\nthis crate are small enough that nothing fancier pays off. #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::rat; let a = Series::from_coeffs(vec![rat(1), rat(1)]); // 1 + t, cap 1\\nlet b = Series::exp_scaled(&rat(1), 5); // cap 5\\nassert_eq!((&a * &b).cap(), 1); // min of the caps }","breadcrumbs":"Exact truncated series » Exact truncated series","id":"2","title":"Exact truncated series"},"20":{"body":"The umbral-mix binary exposes the tables and the verification sweeps.\\nRecords stream to stdout, one per line; diagnostics and the final summary go\\nto stderr. Exit codes: 0 everything passed, 1 at least one identity\\ncheck failed, 2 usage or parameter error. Rationals always render as\\ncanonical p/q (or p when the denominator is 1), never as floats.","breadcrumbs":"The command line » The command line","id":"20","title":"The command line"},"21":{"body":"Emits one record per degree for a chosen family. $ umbral-mix table --family barnes --n 0..2 --a 1\\n{\\"family\\":\\"barnes\\",\\"params\\":{\\"a\\":\\"1\\",\\"n\\":\\"0\\"},\\"payload\\":[\\"1\\"]}\\n{\\"family\\":\\"barnes\\",\\"params\\":{\\"a\\":\\"1\\",\\"n\\":\\"1\\"},\\"payload\\":[\\"-1/2\\",\\"1\\"]}\\n{\\"family\\":\\"barnes\\",\\"params\\":{\\"a\\":\\"1\\",\\"n\\":\\"2\\"},\\"payload\\":[\\"1/6\\",\\"-1\\",\\"1\\"]} Polynomial payloads are dense ascending-power arrays: index equals power, so\\nrow n=2 above reads 1/6 - x + x^2. Families and their parameters: family parameters mixed --a (rationals, comma-separated), --k, optional --r (checked against --a) poly-bernoulli --k barnes --a frobenius-euler --s, --lambda (rational, not 1) higher-bernoulli --s bernoulli-numbers none (scalar payload) stirling2 none (payload is triangle row n) --n takes an inclusive range lo..hi or a single degree. --format csv\\nswitches to CSV with the same three columns; multi-valued cells join their\\nentries with ;, and parameter maps flatten to key=value pairs: $ umbral-mix table --family mixed --n 2 --r 2 --k -1 --a 1,2 --format csv\\nfamily,params,payload\\nmixed,\\"a=1,2;k=-1;n=2;r=2\\",-1/12;1/2;1/2 CSV and JSON decode to identical rationals; the integration tests hold the\\ntwo formats against each other.","breadcrumbs":"The command line » umbral-mix table","id":"21","title":"umbral-mix table"},"22":{"body":"Runs one suite ( t1 .. t9) or all over the default grid, streaming one\\nrecord per check: $ umbral-mix verify --suite t5 --max-n 0 --r-list 1 --k-list 1 --a-sets 1\\n{\\"theorem_id\\":\\"T5\\",\\"params\\":{\\"a\\":\\"1\\",\\"k\\":\\"1\\",\\"n\\":\\"0\\",\\"r\\":\\"1\\"},\\"equal\\":true,\\"lhs\\":\\"1\\",\\"rhs\\":\\"1\\",\\"first_diff\\":null} The record fields are frozen: theorem_id, params (string-valued map), equal, lhs, rhs (scalar string or coefficient array), and first_diff ( null, or {\\"index\\":..,\\"lhs\\":..,\\"rhs\\":..} locating the first\\ndisagreement). The stderr summary counts checks and failures: verify: suite t5 over 42 checks, 42 passed, 0 failed Grid overrides: --max-n, --r-list, --k-list, --a-sets (sets\\nseparated by |, e.g. 1|1,2|1/2,3), --s-list, --lambda-list. Bad\\nvalues exit with code 2 and a diagnostic: $ umbral-mix verify --suite t8 --lambda-list 1\\numbral-mix: invalid parameters: lambda must differ from 1 --jobs N bounds the worker pool ( 1 = inline, 0 = one worker per core);\\nthe UMBRAL_MIX_JOBS environment variable overrides the flag. Output order\\nis deterministic either way: records are sorted by identity label and grid\\npoint before emission.","breadcrumbs":"The command line » umbral-mix verify","id":"22","title":"umbral-mix verify"},"3":{"body":"divide computes exact quotients, including the order-cancelling case where\\nboth numerator and denominator vanish at t = 0. Both operands are stripped\\nof t^m (with m the order of the denominator) and the remaining unit\\ndivision is solved as a triangular system; the quotient cap is cap - m.\\nThis is precisely the shape of the Bernoulli-style kernels: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::{rat, ratio}; // t / (e^t - 1): both sides have order 1\\nlet t = Series::monomial(1, rat(1), 7);\\nlet denom = Series::exp_scaled(&rat(1), 7) - Series::one(7);\\nlet kernel = t.divide(&denom).unwrap(); assert_eq!(kernel.cap(), 6); // one degree was spent\\nassert_eq!(kernel.egf_coeff(1), ratio(-1, 2)); // B_1\\nassert_eq!(kernel.egf_coeff(2), ratio(1, 6)); // B_2\\nassert_eq!(kernel.egf_coeff(4), ratio(-1, 30)); // B_4 } egf_coeff(i) is i! * [t^i], the reading of a series as an exponential\\ngenerating function. A quotient that would have a pole is refused rather than truncated wrongly: #![allow(unused)] fn main() {\\nuse umbral_mix::{Error, Series};\\nuse umbral_mix::rational::rat; let one = Series::one(4);\\nlet t = Series::monomial(1, rat(1), 4);\\nassert!(matches!(one.divide(&t), Err(Error::DivisionOrder { .. })));\\nassert!(matches!(t.divide(&Series::zero(4)), Err(Error::ZeroDivisor))); }","breadcrumbs":"Exact truncated series » Division","id":"3","title":"Division"},"4":{"body":"compose substitutes a delta series (zero constant term) for t. Because\\nthe inner series has order at least one, only its first cap powers can\\ncontribute, so the result is exact up to the common cap. The polylogarithm\\nkernels are built this way, and the logarithm/exponential cancellation makes\\na good smoke test: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::{rat, ratio}; // -log(1 - u) = sum u^m / m, composed with u = 1 - e^{-t}, collapses to t\\nlet cap = 10;\\nlet log = Series::from_fn(cap, |m| { if m == 0 { rat(0) } else { ratio(1, m as i64) }\\n});\\nlet u = Series::one(cap) - Series::exp_scaled(&rat(-1), cap);\\nassert_eq!(log.compose(&u).unwrap(), Series::monomial(1, rat(1), cap)); }","breadcrumbs":"Exact truncated series » Composition","id":"4","title":"Composition"},"5":{"body":"Division by an order- m series and the formal derivative both shrink the\\ncap. Callers that need a trustworthy degree- n answer therefore build\\ntheir inputs with headroom; the family generators use two extra degrees\\n( CAP_GUARD), which is exactly what the scalar identity suite needs when\\nit pairs a series against x^(n+1). Asking a series for more than it knows\\nis an error, never a silent zero: #![allow(unused)] fn main() {\\nuse umbral_mix::{Error, Series, Polynomial};\\nuse umbral_mix::umbral::functional_apply; let short = Series::one(2);\\nlet p = Polynomial::x_pow(5);\\nassert_eq!( functional_apply(&short, &p), Err(Error::CapExhausted { cap: 2, needed: 5 })\\n); }","breadcrumbs":"Exact truncated series » Cap discipline","id":"5","title":"Cap discipline"},"6":{"body":"The bridge between series and polynomials is the pairing < f(t) | x^n > = n! * [t^n] f extended linearly to all polynomials. Under it a series is a linear\\nfunctional; the same coefficients also act as the differential operator sum_k [t^k]f d^k/dx^k. The two views are adjoint: < f g | p > = < f | g(t) p >. #![allow(unused)] fn main() {\\nuse umbral_mix::{Polynomial, Series};\\nuse umbral_mix::rational::{rat, ratio};\\nuse umbral_mix::umbral::{functional_apply, operator_apply}; // monomials pair to factorials, everything else to zero\\nlet t2 = Series::monomial(2, rat(1), 6);\\nassert_eq!(functional_apply(&t2, &Polynomial::x_pow(2)).unwrap(), rat(2));\\nassert_eq!(functional_apply(&t2, &Polynomial::x_pow(3)).unwrap(), rat(0)); // t differentiates; e^{yt} translates\\nlet p = Polynomial::x_pow(3);\\nlet t = Series::monomial(1, rat(1), 6);\\nassert_eq!(operator_apply(&t, &p).unwrap(), Polynomial::monomial(2, rat(3)));\\nlet shift = Series::exp_scaled(&ratio(1, 2), 6);\\nassert_eq!(operator_apply(&shift, &p).unwrap(), p.shift(&ratio(1, 2))); }","breadcrumbs":"Series acting on polynomials » Series acting on polynomials","id":"6","title":"Series acting on polynomials"},"7":{"body":"An invertible series g(t) (nonzero constant term) determines an Appell\\nsequence: the unique polynomials s_n with generating function e^{xt} / g(t). Writing m_i = i! [t^i](1/g) for the moments, s_n(x) = sum_j C(n, j) m_{n-j} x^j . Every family in this crate is of this shape. AppellDescriptor checks the\\ninvertibility invariant and generates whole sequences with a single kernel\\ninversion: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::{rat, ratio};\\nuse umbral_mix::umbral::AppellDescriptor; // g = (e^t - 1)/t gives the classical Bernoulli polynomials\\nlet num = Series::exp_scaled(&rat(1), 9) - Series::one(9);\\nlet g = num.divide(&Series::monomial(1, rat(1), 9)).unwrap();\\nlet bernoulli = AppellDescriptor::new(g, \\"bernoulli\\").unwrap(); let b2 = bernoulli.polynomial(2).unwrap();\\nassert_eq!(b2.coeffs(), &[ratio(1, 6), rat(-1), rat(1)]); // x^2 - x + 1/6 } Two facts characterize these sequences, and both are checked as properties\\nin the test suite. Differentiation steps down the index: #![allow(unused)] fn main() { use umbral_mix::Series; use umbral_mix::rational::{rat, ratio}; use umbral_mix::umbral::{operator_apply, AppellDescriptor}; let num = Series::exp_scaled(&rat(1), 9) - Series::one(9); let g = num.divide(&Series::monomial(1, rat(1), 9)).unwrap(); let bernoulli = AppellDescriptor::new(g, \\"bernoulli\\").unwrap();\\nlet seq = bernoulli.sequence(6).unwrap();\\nlet t = Series::monomial(1, rat(1), 9);\\nfor n in 1..=6 { assert_eq!( operator_apply(&t, &seq[n]).unwrap(), seq[n - 1].scale(&rat(n as i64)) );\\n} } and the kernel is biorthogonal to its own sequence: < g t^k | s_n > = n! when k = n, zero otherwise.","breadcrumbs":"Series acting on polynomials » Appell sequences","id":"7","title":"Appell sequences"},"8":{"body":"Given a source Appell kernel g and a target Sheffer pair (h, l), with h\\ninvertible and l a delta series with nonzero slope, the lower-triangular\\nmatrix C[n][m] = < (h/g) l^m | x^n > / m! expands the source polynomials over the target basis: s_n = sum_m C[n][m] r_m. With trivial source and the target (1, e^t - 1) (whose basis is the falling factorials) the matrix is the\\nsecond-kind Stirling triangle: #![allow(unused)] fn main() {\\nuse umbral_mix::Series;\\nuse umbral_mix::rational::rat;\\nuse umbral_mix::umbral::{connection_coefficients, ShefferTarget}; let cap = 8;\\nlet target = ShefferTarget::new( Series::one(cap), Series::exp_scaled(&rat(1), cap) - Series::one(cap), \\"falling factorials\\",\\n).unwrap();\\nlet c = connection_coefficients(&Series::one(cap), &target, 4).unwrap(); // row 4 of the Stirling triangle: 0, 1, 7, 6, 1\\nassert_eq!(c[4], vec![rat(0), rat(1), rat(7), rat(6), rat(1)]); } The identity suites use this machinery as an independent second route: the\\nfactorial-basis theorems are checked both by their stated coefficient\\nformulas and by this pairing.","breadcrumbs":"Series acting on polynomials » Connection coefficients","id":"8","title":"Connection coefficients"},"9":{"body":"All generators live in umbral_mix::families. Each family is produced by an\\nAppell kernel built from exact series; the “numbers” of a family are the\\nconstant terms of its polynomials. Sequences are memoized process-wide, so\\nsweeping a grid does not rebuild kernels point by point.","breadcrumbs":"The polynomial families » The polynomial families","id":"9","title":"The polynomial families"}},"docInfo":{"0":{"body":142,"breadcrumbs":2,"title":1},"1":{"body":94,"breadcrumbs":3,"title":2},"10":{"body":43,"breadcrumbs":4,"title":2},"11":{"body":44,"breadcrumbs":4,"title":2},"12":{"body":52,"breadcrumbs":5,"title":3},"13":{"body":51,"breadcrumbs":6,"title":4},"14":{"body":88,"breadcrumbs":5,"title":3},"15":{"body":70,"breadcrumbs":8,"title":6},"16":{"body":43,"breadcrumbs":4,"title":2},"17":{"body":85,"breadcrumbs":4,"title":2},"18":{"body":133,"breadcrumbs":3,"title":1},"19":{"body":108,"breadcrumbs":4,"title":2},"2":{"body":89,"breadcrumbs":6,"title":3},"20":{"body":42,"breadcrumbs":4,"title":2},"21":{"body":127,"breadcrumbs":5,"title":3},"22":{"body":132,"breadcrumbs":5,"title":3},"3":{"body":110,"breadcrumbs":4,"title":1},"4":{"body":71,"breadcrumbs":4,"title":1},"5":{"body":64,"breadcrumbs":5,"title":2},"6":{"body":83,"breadcrumbs":6,"title":3},"7":{"body":139,"breadcrumbs":5,"title":2},"8":{"body":106,"breadcrumbs":5,"title":2},"9":{"body":26,"breadcrumbs":4,"title":2}},"length":23},"lang":"English"}}'));