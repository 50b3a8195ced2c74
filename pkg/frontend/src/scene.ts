// A rendered sample scene bundled with the app so the page works before
// any file is chosen. 128x128, three objects on a noisy background.

export const SAMPLE_SCENE_WIDTH = 128;
export const SAMPLE_SCENE_HEIGHT = 128;

export const SAMPLE_SCENE_B64 =
  "iVBORw0KGgoAAAANSUhEUgAAAIAAAACACAIAAABMXPacAABpj0lEQVR42iz9zc5127KlB7X4632MOd9vrb3POWkrzckkMTeA" +
  "5JugwCVQsIT8g8i0oUCBeyAxIEtgO5HgLkAUkJCQEAWoUIIKQiYTS0Cevdb3zjFG7xHRKKy8hh7qCrV44gn5R3/vX99TpTpP" +
  "q9+F2GGK1N024nrcvkR7zda7VVuooXbnbfWWuS/d5/bVaoeyV12mJr9M+bun3Fof6omrh63vE8dzUO/AuHeamUH3gfzsUI+x" +
  "a7+u3sdQdKKY0PEIwzC3fKDw/YPx+3oOFw7PnxVfBTF+EAf2HkDf6AOUER9e5ie2HM+VccCSZN2wt2tSN1ds6fnMnCXvtdb5" +
  "63NfovThvJY8Gm/51vJbeS583tv7h1S+7vy8C6qjre+1548zn20kRasuNwvonRPyJOplTbPxjL+cly4DJA5RQpZ516elYs8O" +
  "s/fL3QY7YfPFVaLSetIHwo7J/aHTSrz858Bgf/sIccsrfcZPrKgTUEGU9xAQ6OoJE31EZsHspozHevSscRVF28VSdNzSGq3i" +
  "4ort4kyg21K95n6pVrZXy9yN+K79EsvxNpYcuDr4MXG9pH1jQ0XajKiQ32QMFc/fx4HndrWul2IF0ENSVOnEOkWRcqtNPKLS" +
  "JvlbH2dXcwXMoEMhHr5CrEVqHfGwXjryzufHy3AtZFukbQ+rRkGanp+yV2ylZsyd+Ur3o6176lx7w3DNPEGdcT9mv/7Vr9L+" +
  "d9jenckpNtR6IZEp5J6DchfC8AyQPYct1b5dp+8Ih3X2+azCHPK0+aKOsatEDkodWnyr0Rid1zYhVPvwY/fTyqnKTFUhjXxC" +
  "UKSqMMqkAKSlLfs6f98I0ZbiNtO7+KLZj0s+WpZ++ESjLMsqHrwTeXz28+PT6uJQyre7gyX5mnaXpebp0mk9pGUb+0X0e+LK" +
  "obOkp+7+Np/1yocpUs5XXzZnwxJQ7wZ4bG7DMFdkF57gCVJPa6gW3ERqVK6m7yyNR+oNe/AZ0GLfrm6//PK6FSfd02w0JLGH" +
  "GtESOugJh/QeaTSzBtGsNSjayMzQoaoltoW6LN3kYSemlJDPY1SRyHVZFTySQwfzA7z0hVptntAo0nctbeVAdJ4bu5uiOtBV" +
  "h8D2pLU4rXn1SJFjYYsz2g5FPStb6xhiJUQboqsqzDPK69N27s4557074pKhWnjcG5u29DopxZJ+uS+UuHYxvXNh20viG9YN" +
  "zmffYSW+0IpHDp+NHJqyKoR9lEvcWS4hRpdmmVuP3RLd03OVl/cQy902/a2W9tYXI6KzZVsPg3uVmj2nSy+YyLXdomZ2UqKt" +
  "p2alO1GYJGwFhfco6GmUPn2LT9fe5n1sL7b6cLE3JWqW/Szzw2LVkrGfPjAln8df8aQMryXyStEOGS92oRBz2wWd8cgNaW+v" +
  "GcZ5UQQypKicduyyobm6xz1uqr363XXLOmgB0HrvWUe3wGrPbA6S255wO8pVaIJ7UaKOrcJmW6i+z5/ffIkcI6RqWG1vTf1A" +
  "zqF8tGR3UWx3nQy4qJAgOg+Ni7o1hb3kjHyGxD5pn643hGq2923vf/3PY7dGky8NA2K/9v6oF91Vv1e/XhDUjpcnGA92W0WV" +
  "DIscGKs/zfgqwb4enoY75TO2741xrg7BVlNbfS2t6YeSUzbVWRn62oba7uqXAGMm0ZKGAm9es17lq7eHr2/zY+h6wFf0bkqr" +
  "ER3iyZsFuPd3zdDSXfZuTUOqzuaSsH5KvlTvWkOturRjKj1sBV1uuKyEDn8xPpNnNuooe1jjsYFdKAGRCSnzEJ0CIKW6xeBz" +
  "yojxqBqbT6uGI+4n1Y5xZgoUtosmZjQxjMIW1mX9tl//+pe6ymh3j+4PRu6lUxen9vXU17Db8lYba29viqt5Vvshxmd9S71h" +
  "0FLpy6fNO5q2j0f05cwTYzns6uWxU8zY6PFstKX1OXV3A29xnuk66lpne7kUfZsPqnVaj7KrY5So3uaH1FKITJEJZ+0b4lpC" +
  "rBG+TbIiEsotUzUFBaGCDmXvl8tqKx1zfUy1jKLQYhZaaoP6tFpJYyyjYuc77vDR15Dzd/pgbdEghHh8tDyagpQ8e2xJuSc9" +
  "+9Cuhan4FDQtxbNUD5XKXDwgW7rAFw7an3782Zl1djOkO4q0flKf9tP7jkOKPm+W8qADy/SluUPx9DSI3jLou4eP64nhoCT6" +
  "JXsJYkuyZQ8V2ovRwmy+PTYPURZvabgurkxKwkx3g6pfaO/VhMJgDae2oNkqZKq9SqsuZitNkGgsF4+HJIcaDrXPwEDrtjpR" +
  "TR73yDHH3aukO9sY1LX22DUQSstew1+PbN8a0SIKUYloUoYQd8lhe5mqoLEcyLznGgjjFC+5F+2M1Q4+YtIU7EnA1L+Ys31J" +
  "q9YaHQVjiIK27DV/7YFjn5TbjEVLn7/A4L15vPIppJI7j/OQasFibUFrBO5wbLDjQrRf02PrhgOKGeeubJme29q3ZKuJw5aH" +
  "JSK3Mtd4m5TLt1q3ngxhycz+C9VkZ0n0bFDuh9rOdJ17uF8iB0uioSayhh2XDdUY6DIuVVlxxzOgKtLVZVTDO7l69A2ntnek" +
  "dBzDujzP6VLaDtwxtKzqkVLjksalqljd3rZllu+IdrTcYVOCVporRLnHy0SKcJl5idFWzKPRRt/fO2gpxX4OkSFCY1EoMJu/" +
  "/jJvuyy92mVW91Bz7ZItGmFNjOruytnPlhj2NH6F3AW4WyioSQmFhHy0lRKWvuuyo3fSvoTpQ1uxhK3Rddm95QhzyZSq7S8k" +
  "QiAf6hdr19ESBZFo3BaE8hlnqEioP53D1G/m4aiG6C31blR6Ct2y94DcFhGVherc4qG8M6aPW1CmxE57Da9eGmPk+nyfg/Gw" +
  "5yMV7Q3ooALCoRSfIAyG/SXQRknjWC2OxNEv81s1Vme0u+K79FWQPqRuwfGp/jrsu+SYJe0Y3UBuWs/Apv359Wf1nv5Z8hos" +
  "2bWNUhypInlv2Oi9eAxhDglWt5afAaV9LwIdOTihbPClnWG+kgi5oNPZbZFLFJvmodWQ+W1mSM9WO4giAk1IlrJ7qNXoq/XL" +
  "s717iR6vuLeVGPnMtl53D1T7sGw9Z+8NGTa7Om1PHSKKXCRWR0xBSK/BzuopT7ex9MROfarjSvNA7Idli/oWJgXVbRVFqsKi" +
  "blNmibls/lS1GDTgNkWXy95Oj07kNiObt7puxRD2W21flaE0XxqHd4q1hZpDGLbsT39+q+nebj3oD926nc41mhQQ1VNBQlzb" +
  "6lktNl8C2ld1EoesW50yzBQPwBuVOswl7n2add8NETcpryyr4+rp6u1b1NygS6EC3uI2zPIec1bB7ekIFSV0NQ6ADhNdvT9m" +
  "gS+dKZK695IY9nPB5she73aiN0MDsM7dHrv6tWafc9V9QHUM1Z5bUhiTYh7ZYq32xV6txOmHpra1NCsyCqaeWPq8EV29qYkd" +
  "j4fsUC1GpBWlNM8WcVQDLqr4FmXotAAv/YzHVqwl+FH9HJq7zH78zS/FhkXWZ/bJk0aqpm0OpJvQWtQknIknXEttsUY/V1or" +
  "VQ6p7Uat3oXDPSOrola6JQTTtYwqadXWQdXXd4LaoqZMWVIvSFboqbcArSXl5fOF2veyGPfLX3+pj0PDGCKUELnQUZRp3aiE" +
  "yVB50iSeqHc3F3aEhETvwLG3HM3nRZVqoRQe5KFqN+ug3Etr6vZGrdEhW3cgOU6KaMtOSIZIU583oEWcU5DBGr3anFSvwd6W" +
  "am/nNtOxuqnL/cW9t3k3vA3dbvSbSyGew+09f3Eb3CmhjkbwKn4tLh+/U4eWtFVKWqtKJpq0E3vVGAUdzKIcB+veCZNqU9HS" +
  "mvDCHtt6S7xuUvQWb0EjGZaGE64pVWXaIjEeubVoRyPdPPeHAguXFM1nf3mgY1VZynRpjOJfJs9vjmMSj7iF1mxfWM1h0mYP" +
  "Nhdfk7jSVUxSiY9Q2eoOy+VuZA5ImzXR20v1wJM0k8O6c6iUhaF6j5N7SEEyOrdJooY1cWuAKlqtdsst6XpCmoKWfcCEUX0f" +
  "81SVKjWVD2so3cWk7K/+dEZBrMqRUrXhxcsPkWVw1OsRziCWlkjMNDvMKD+LbgoslSNraztc1bTvTGf4wnXGuTZzFmt0ywlC" +
  "WSYDXUVdyiVlIQtqyLWgUTg1e3RtFIDYihqdT0gRZjt9DuZjgHxrDwsKdH3KcTDR4yeaJqGk6i0TAV9qaHMv35N1m8yQVO3q" +
  "0BNbPzqitlSOIMY4Ze2iDGYez6FDShK5ZRrWek98LxyvCMmtQdvrF4TEhnEJgi1+iH7jO7aV2F1EFHpIuXRtoKQJiHoFd1dk" +
  "24+vX++RujEzGj5uKaHDL/orvc9rYgg7tR1tu8MHHlhAYF3+Jc9PSsoIGrUFQISTtFrcLxWIwnCOvYbKY81uixJBgAhpRj89" +
  "zGrABXqxfGOpWqik5JDk8VVFs3uvt9pC+prLj2PLt8jxdBz6RG6U1wwbYQ3PclMOYSgWrLOQCfUh7FwjzbW2r+GKXSXRw3sL" +
  "1MQMW7FOk33kXcuW811I6TnZaYJc7bNHAlJjq2S13SP8lhX0z3kf92zeFKrjBQWeB95ccL5Sxb8YGaXBSzDtx9/7k+agttfY" +
  "1nVWxAt9uT0avDs+WKaHmngYakyRkmJU1mR49bJ0O4P1UIfDt/Qwrqt/OWzdk/qMz3zgR+1bH9cp3lFtAb3KbOvL2bsneYWT" +
  "6JTDS92zWlzd+4JZE4aGRbTk6zm3ftBhgtEPh6iaFJylvO9UGLrd7c7bzPxmv4f6U7c4ah9QtS6cZ11Z7rofzsidvt305nAC" +
  "amgzhSr20kfwJlfpKh5mCygKY27eI1xpd7fuV83iTZ8ldpbG2Lpn7zpednebqS8ta3I/Ha/6tvFuO3WGYTVuw5ft3FZcwwc3" +
  "y0QoqqqrNLZAfOnzrvty1RRt4yMiNIhHbZR2IU89qn8ex499S/mivxDbeyeVmBEtmzRPqL/hWxMEVZf40dhqr43jh94bNs+m" +
  "WvGAFAP4aeZMKNPKh2/K6eUW2Lr0MNNSu7Xhci5r2dWDpxc+jii8ntIhoJdr5tZjmMFqFcYLeOjDR4FqQidUUamllKLI4V2Q" +
  "NR6HiapxmZ9a+TM4uVL1oLgd18Ch27QivKv16Ws0T8OD4S3J5O51Lz2/8Gwz2lb789/7c/PYzDOE3UVxkt0L00X2hqMQtK36" +
  "R0i/96jYkkyTNaC9bFg/a/Qp0FZjFZgKCmFmlC2HGLVVTVb1IK+kSBfr0allMguirJNmrdBnm9viFtZWD5S131YGQ18piD2K" +
  "CS3vWFWt4etzuVqqgFpoPWibTr+1pSMsk2Osdj0QuwjzYld9t5ISoVkLwOgulm109yRuXVYHpqyk6Ry60X81vrOm3OQI05v5" +
  "K+0p5iGdDzq9uCYT5a+LPE+J64EgRUQFdJgdnkssTZuE/c3r62k9BM+6zd9fr1xkcRpretP1pNh+W2R2tcAT5rv964fvlJ2T" +
  "USCAtKEFbUCAI+sBodzWEvLJTw10Qjlh5h4qvYrDKgcoNom1letQux6oiz0HmDxF65HZXXPxAV9vf3g2M2KMClSg8m5T67oZ" +
  "sNLT/Bvb1C7bqroZU5utBRCS7IRZdUNEvm3EhHVxHK/Viaw2D1UD8jGJg/GJFkP0ap/MfKCjNbHN78pf9Pg2isN4oY7xcj5d" +
  "OTwe5LsprGrXQ4NLS1CKMEQfYi4iT8B+/NXfVD9TYKDg3jyzOLWf9pKu6pLI+elWSgkmA92n8vcnUjvAoWQNcqsrQnSliqmo" +
  "YA6/vRAy4YewW23Mj3Ynb7R1tA/tJyf9c8qrthwFO2ApkJpL2rXHmkm5Y48xiS4wntGHyEX5lHTGFNnheorfeqndoeKhF/Qs" +
  "ALGwg2H4BgY0UUPLh3KHmuM5dhDVFBVtRGujh5WGZYq29mypEoMmlpDIuniO48E6tpWlbCfsDfuIesaeFceDe9olZk0tsNC6" +
  "R1uoqKrs9Fl6l4Dd9ld//UvcvQEZsXIC+dKXYA8tix72kv2ASqMwjU1NmqyNwTDdGYrOo6Ya1OXZd2yvd8u2qu+hTl5BJS0w" +
  "v5sIQhluVKUIjzRX3Z2J9HTYZiwt8UigXJtDpH2Iyhagz57PoV7PduXbi1DBAfnuxzpcZQftWqWn+u0mVWIe+qTJCb32SLVy" +
  "lqbz7bLOfDdTtO3WjFplU2yXMulsJ2fZM3NzGLeFamoHmXsca3dQXKXb2bxtuPKDpfTg5EMZShUp10FQq9hHe22PdYftoh4l" +
  "dv7y1aY5jVVWIg7op9I7osFmERBB0REWbrVDuvchIbU3PanD++Ljj3HCor24VvWYNttS/SsHWKzRo0iISaS3C/NjLiqP7Zez" +
  "aG6+vLl6306VY+ZeqBQxTXQKpOyxFarK7GWAkJi3FrSgL5cbbU4DKLSRlO121G5MVj/bQobg8walDk0uIbb4IDDFuvgalnyA" +
  "k5857cM+5aOUjw8mYcpNnsa2+V493F21JzdG5aPuzX1O9WQpaYKUkVlTtA5GoXsuLHqNE3vFKu4Y9vd+neiXJwQbUFMHrWxT" +
  "ldfoLFqgRXrbM7VXbjOpAIqw4bVFFnqYa0vJshqXyyGoJGDdcNQdMlxl9a4IBVIk8DTPlkxAynR2l+tz7nNptN4nZYmhi6GK" +
  "/Q0/SiUQEOx9PXMO3dVDKaeaokfl3SFWcIGVQmoGbYtoq3fBXIgjM981ljX24QrKK7mNktXasUZiRXVLNCCiWsdj+jJpPaKe" +
  "mFniLzBptTOK2S1aewYk3Ry5rct4bKSHehsGu0ujexrv0DGTVsZHY6BG2+uXv+7n0+IUAN7YZFod3c+/+gBAMxgbAR2mB1xt" +
  "awfdlqoVtTJWwPJebo3amD60a5m27DO9t0vXp3laUZRoYnKDARUVL6OmQNvLtgoHVU/nhpvWPQv7pMXYiyULPw+cUeZouort" +
  "bx7GbIkgQnVtMbh0sXfQ7t1FU1TvlRIurVZW7wtXcxkc3TtqtorTykzYIjrZk8Coi6b7VlqiRm+BifrwO2toijUOC0VramuG" +
  "DpQOetXHcXQ+aI9FlXL/dM7lZkAGhXtDpi379c/vHCEsRbfcrmeP6WwtKCmuSqvqAtuhZatk7f2S/YEj24/aPSeA9qFeOCpk" +
  "ayD5WE7VWE7gd17DXHKLD9y+1Cp40G4tF22ypo4NlQ4Z9ftYc8XeBu30fQC6eZudIt0wbU20Rup2wUBe4kW2FigNaJqDZSJp" +
  "6TL06LORHkaquqU/b+rSQ439yYHRvWLAU8qo1y6jtPo4V+Etsnw0W6WtD+midH1UYKVWU8DF4j3SSXT0Kaiq4UBK84lVaiKI" +
  "eFMKlMUuz2mRskTD/ur151axDDko5nujQMLQpTXpEuhq0wguN0pLvdmfsHAdLenWKcoU9oZQW1TsqTY9Y0qxvSEyEbYCk5rW" +
  "Ro+iK1BME9IFrS3LelkxKz7HOvZhVvwcMbbE5VvVo/e24ehlFq1CfauvY2j8HHuW1wzPne55z+mPPvOeGm3bWlDlZq4jCy3S" +
  "unVM2xKxLddWVyu7G1CtfDysW1fL6C5xesFdb1ibKXYOlWnRoBQh9STeY+yxjw02G2puAZSqWKiiJmRXyzRsQWxZD/xQuNuf" +
  "fvyp8RlpYpAP4NNSJ0jTmpel1PSNTkO4OHY2H3v5wy3mQoUlu0vCT30XnlCvbpPexWnj6Tn7gTR0ms79G8ZZcjcMI1fpwZJu" +
  "V1kmSD0SQzVFdZvk00dYP91mKHXVPlQuMSSkTLbWenaws0ZpTrGd4uKtzrs1JEhHEsPy0Wkf0SBLFthuB++s6Ymd+vr1skZh" +
  "qo0lsPESFo6huzAYnVXg4zLSup+Ur8O6MzqaorZfPPJB/7LwOSZseWbvxssWJwspEqwCfIkaN3G4Wlc5c9j7b35x5dM9nuyJ" +
  "KtAsmT1EMtxN7kDXztKq3QZrV04x677QIOMBRnYZZWcLWy33fo0g1IiiSHjJ0k6UKUUkREVbrDvHsXRvHSNRWhVjKEiR7i08" +
  "RERM3aqHg0g0BkmUVz1DRihyXJriqrW7jeWUelze5VmOyulPXzZ8LL0PWIIPD8x7JrYWRsmWWuMBw5WZ7mFXy9H7mxlSubdp" +
  "FJ5w6coR2rva1HvfPU8sSO3y6Hg4vO52D51Qz0SuDYPxWvs1lDD5bIaH3s8efrZ02o/zR2Yu09PPD/Nd7a+Slnlm7+76/Ri+" +
  "3X5pskNUTNmbQtPd9hICoRS1jIx9iNNAf7czmK3issluDFhqCwST3aY/O0+txmvteaLLpzxKl7iYbjp0/sGrfLKjconY1rpK" +
  "bGSJeru/tW3s2sd26wlrF/mDiiPMpDdTbEamnmipWCptqWk07nFpuVjBLeFiuQk7dbCeWF0DwpShsdAxvaqGOOVkO62Gxc5O" +
  "ORQr0m/kqF36mOFZ6IdqCs++QsZjIjJmSKr1Xf6FXoo2A4SCPe3Xv/5CHcdcP92mdEnyCTXhsrACzlSh/MxAikFL0gzVh2TE" +
  "2LXIPdViRMeqS0wK3qWR2V68Z6Ae7VBWuYto9IJgm1n1SHuIRBiyOUpymi98tmz0wfUsPc03nxfGt32Hn+k03YFeYoanvK1H" +
  "csi9RmqHqj+Erz3cb45mKk8cRGNVKv3L9085tNS0qKpLPPaZw7BYWu2seXQ+yrGTZ5hs0y52W43HmcpIvxPx9u/M9z7WaLnM" +
  "bH4dhe17mHeCw7To1k05VQp7dxwzb0hYfLLfAhHBsj//6Reg8lKlMHyYfDgiWnITX+wsgaiXH7HFcZEWos70Ibs3GJ6Qqo4u" +
  "kYP70QRKW8g5hj2iAv1InVIwyaQBXRNe8ki4GP0bba1mgecJ3wNjFDZGOhJq4RoZHan9El3GtQyQYWjzu3B26TC00LlluKQ6" +
  "sgRu0QrWQtgWURVdybByXQ0gD9OFxZx91LH9SfTLaNDHjoDabg9Zj/REF6onfty5es8X7Wb6cWJRnfMxaN+hk9UFb6FDxAmD" +
  "2INtu70H6AJLz5kPcJYJxb6OHy5K43xrfr8OTa+CmIq21La2tkCzUHzkZQ2hW2VXh4uZaWkLSJMsQ4tnWr12mCuzSs88TEhv" +
  "yxIqvLjOMQYegaSJRM9ysecpq3ApfOAxpHzLhhmj8Ingg8OjsEJBO47juR+swqmVkVmeEmyOwmqbUp06wotbEUJxTzY0lGJM" +
  "yJGKKO2x7x5TWN6XHSGwyo9ZgNgLm23QZRTTIVF4curgKOB3kVOf6vgddehxeU2RNZbf2f46onr1JaL0W9vZkr4p6XApT7bT" +
  "rPbd9suf/9qyRLALHNtFuqJ3MQAPda8nJZTS5m10PEOzfCBtkVo0aYzu3eOQR+QFq1X6Mt0UhwLytEs9o09b3ZVTDIYltOyt" +
  "1kmNeNA/WrWahlHp3kJrVU+7DPNep+uyD6hFqhZvNsZxagPas/j5Ra0sUvfA1gpyOX1Jp+vQDRZwvnZuaapyd5kfD1sDGqqU" +
  "GSsfyWB/TE8Jg0hI12NzRPcuIXWM+8yBlDhYrYO1Dwg6T43c9fGKPoz5PDGb4vJYfVHbYtueRXNFyGMR4djoYfY3f5qEtw6n" +
  "lqLuzaPaEd7rKbXwqFoWqAVlehp8dIoXRwidUnhETvOnq5ke3nfJoXx6w+3IrVCqs8vFhQkYffHSnj44nqFVKd31dn0UL6y2" +
  "ZkZDRln68tRQ9qIMMNUm74Kf9A/TR1RtccxyanFqpdtmx2FL9tgMigjymvZLLYlIOohjoIumKsu3bfyO5wXlHmgN7W/JoZ4b" +
  "wCgt9/UwzGG17jxo+egdSUbgQ33FLMlNPdJUjFqwugUh07P/6NxApopv/9g1SO5ES6jY15//ultqwsty1JRDL6nhn9ojTt4Z" +
  "JjpBq0NHlnoQd1/GWWCREU7cWMBQHghWx0vXNpp7PtLBu5zN8N7ieh6lzLY+bbLXVgejxWfK3809Im5SFyJEmy1VIja9H0W2" +
  "Rwc19x6jHOOKLRvbJLdF69Le3DH6khjP3dPFVd28fzZgrllhlsgS+WTOeEm3yty7w498daS2RsxKDh5Vv+mY7st1NLeiRCvU" +
  "wUvkGKo91DJaRDJldVmH4jIz1W5FPDNx63BRFmSLjOKF/cseO0McIeL+2I/3FDN5YL20sKcWVESkxZUpLYVui5TsNrmxvU+f" +
  "hab5/KbYzhwG63DNcFmsNqJaDFYIvnznCNnSjm3cTT9bwdv1hV08vO5qtTUo/Cztw9w5dwrmFtfMyyAPQs+3LM2C5B1w2mNi" +
  "OUvVvhUtS2Y5SdgOB7JdXrAP9lAPk3XXLevkTrMYZveloeXpXqxW4rHWZtztZtlDXFohT1PltGJoGWiqrtC/8+f90ylT7Vte" +
  "8elSe8uzq3U8m4etZJzaWYOkkp3i014it2H4rMyFrPhhv/z1X+FOf6HVLzHvzOKPLICInq2l5rYfdzmDG/AjPqstq/ZszXad" +
  "oS3ivPkBZDzaKI6XMYXPAwmB2YbsMkNLY9y4bU/w2l9dF8+zVpt029KQKY4Lz9GZy0an9ilVLpU12h+nRvo+xXb1OUfK0dRb" +
  "Ol/yaDvD9Gjv/TOe+chj29Hszo7ztCiIi61VxqiOmXimidpezzFP7drnEUop8BeTm8OHSD9cKmJst7UbwlOMmttW2GtlHnSV" +
  "qhnHM1qJ2GN/7SpxrLCu2DTxqnZPoVqhrYlXi319/dVpBsq99nBEUy0oui1OqM1kdvOca7M3VfRT9S5dzilo25H2NODZHGK1" +
  "q0NGOG/Jph6Tm3umWUMPqzuhvXBQhU//Cv15xiHyr2i+drESkVsMy/gWmDk37jUjTFRpwi6QIH0AQVmFR+L4Ut3ferT4gX0/" +
  "wPRfaJcW0MunuUL6EfFG/MQ9mulJRVWZG5+2qUsyylqFYhzLv5tS2Z+ys2JYQnjdNt/JtlWpHrPnpdtT1CTVNfvpxaNdTxoR" +
  "S3qgtgeOkocyd23xHr1K+ad97Nn2939932BbWQlSU/YgcQTgXY0eq4gfde8GATXZMEMyxWBNCX/uCIWqgxunwYN3hza6eYqX" +
  "jpIl5qzNZIWr6o/q/BGAbDK1xnKEcm24zu3ehh/XeDyltdnDptnWElXlaNsDxlDYg9Wqhxsy75e9HhV/bnfn3JqpIpeNQxs1" +
  "LPjqXWLsoCgEcYZs79xhjsHmyFmWQx9ho4+uFQuhL9XlW6m6M4bxqTr6fU0OshfK8SPjEdPKzRFOawmweqQu9GwX5R0aqqoj" +
  "D/PaJpC09VmHvX/5YZZmAF4uO4ZYHTWerTLEqvY4Kd8yoSBduQ9IqQyvVPfeiT8fmW7dxOtQ5l7UMIFVw+G7n9AWs7U04oxQ" +
  "b+kLGt9wgQvvbHNPedLNu+9Qo7I7242Pz+jPYaMvVX1uDBpdIe2JGxrg0kqWau3Lj5v+axbFFIXL9Je9lhABWqeoriiPZv6A" +
  "ZgGHZCHn1ieKn9E02oW45Tk2ymyiq+4leQ7G90DUK6WB7vAbdVRK6LNFFbf7IbvKMy2rTfvWCqhSNdT7XlKGol5yWTirRJzb" +
  "/urrX28VAillJj+r3GV1OWXvjWPfSz2Kt42pWr3MQw3JCqfRqZuQnxd9KKXSD/mp6qsoutGt7U9EGDx0XuMad6ne7tyStM6M" +
  "F3QPvpqCSMrZLO/IfqZGToJt1RvD7lPPz9DdsDTmEMtRbB0dW2lO9fadWxSz9HnmPO6V41WiPzIf5VgzbOP7rEgj27jNuoK6" +
  "BOcR9Qyxkr6G+dJHEWCGYdIkYuf61ARZsXaEiyGfMRyy0/v1sJRC79m9aryR2qKqKbI/KgHQWBGtHXAML0mW2Z/eIS6gyePi" +
  "GVRbgIIWU7ARX6VFk6PQ+tT4da97t0Id0gpVPDCRKa9PY7TeXmdfzHOhI+AArZstNfeDlm8d79uydplUqrt3tQp7ZxIjmNhY" +
  "8zl6ysBYpgZb0sCc36hfHkWJHpXrUCfUZKd6zFw8z+feMVzVl5fbBfUGbu8oaptxfGpPiyLhiu7tTJMcO25tJmxYUXYolveg" +
  "S0jrsEe7vq1DfmDkcbN0lHDce4eMrjVPqc85tTkYrtjv1ufdvk7pUtymqXkWf/Llsl38yqaTMsYy+/O/NgttgmEsbxNXtolK" +
  "mqhXgr5hg89d02Xn9B0tsMfWqyLLVFr00vPMe3gvQPeZQ9IzIOCBAd8KZyrdRLuhbmre2i/Om4rOdhgbVvARbDjE695t7J8r" +
  "Z6AtXSjp7FKqGz4JOMs1TUazlHuZkLLl+8x4Ro+UPuzIQWlI4Q1ZTmiF2IMrekCCtsp/DB8kjS2oNxIn3Dh6l+5HQsfugmUD" +
  "QwUis7mhrqqQYf2NkFSMW1G3qBX6WyFaGnhKdE7xlXpOi+wuhQDfWq/WtB/z19fIzrhttHxeLrtg0+RRShZPDFdZ6DIHdCA/" +
  "xhBT1WqoCqoIzE4F7uSPYSBg7WoQYWfkXQJCYlalmtI0n9J+udyt9JRCyxshWlat/iyLaHW4D9NYneXhJLCA6dpWl7lU8fgK" +
  "PrUgFWz7N//jf/eX/8a/9Xf/2//zqZKqQ9u7e8kzqza/nF1XurQsut6Bs/SjIGoS9zfFvS48Z9lRRKXK7jHPXFu3eJTIW+Wh" +
  "qjwmup27livxdLaEL/+2NYe8LT8FfRwm9WjIrioU/xgfVuu8Vrq9+Vo+RP7hv/G3O/Q8Vv02OZpZ4DxmruUVyd3+Puq5BWG1" +
  "HqPkNIBSGKq/1fry6JRn7NmjVtePZ/7241/h8agWGVk9maWa13j/yOqgXM8B/y1EtJ48/nRed7/080B1oadSXGPr7yanaO6e" +
  "Uhu8RMbD+cb6vOTF3L8PGQTIzYx/4z/5dz1Rkt1mCNNVYv/3f/zPDoPl7q11+os3bN5KfpaM5jKeHHuufHD0WcdFj7l1tWQ8" +
  "WoAqqSYuWLF0o2brT2NsDOvHw2yXqFzevcxkmxzCBqTslu05VC+TX9LvKsqiDWvsRoS11fwJ+Yf/5X9E+9Z8UQsZ8mS+BRbx" +
  "1EaZPnnH298/9Z4qWQt5Tvt9vd95q4/nWX66y1qRcgtLLPThxuvNddk1oBqxJuN7k0oje6vPO/kybbb56L51jUufkbJPFwnn" +
  "d4pqG7cdorTPGvCS78JLuVuH9sqDamGLtEgr/9f+o/8WTLnLVdpghT/AGKOQTQa0/h///v+q5m+DEj32jMz0ofIBrDc6zNbz" +
  "UF2J04canm+145tX1A90Iaw6vZetdx4PwvHcqmdJCbcC9+NxZIx5PcvsCH43vh7QvYId9C3y/HzsS9S7P19tzyF/+w/+oYOL" +
  "0uKuKfYxfm3YyOfZw95lSD4DSnpLVSdsGnaWjJbWvabPyygL41W5CwhGb5mvz+e7+Msxr1I0j+K/PPt1B+Vx4HfwOH1s1MK2" +
  "Qqjo4V3YC8PWw1GeZ7zqmxLFjsatu+4TZ7v1cr7/bnzeT5RFl7v++T/6d9UEaEm2W3R3mzgqq8VFU9oAktBGOh36z//D/9ge" +
  "z4h8YMeqog5L9uwuo5bvct1JXxqnytpbxEwadMtes6gqZTDOpY/lIxHYltJNnZn0s7JUOowVotr6m+1f+Xynq7ergfJv/O1/" +
  "ZXoPVrdetOiVr0Ofm+rc0GadhXXGvHTx2kSHzqK69m02dhan22N11PHNDXbAPISMXo97bFm1h7p6MaO8KkVKeEj1EhHdOzBW" +
  "HFgJvUz0aR+SW85Dk/dOw2FndtEehuV218RyxeZgdoBtqv/wn/63CxC0WjcMLZRGgQMOQIRslIp2oykAxVugXW0lqsb/97//" +
  "n6TM7stGqxyNUlZjef0oaMrvx/Wn/f47g1drQRz0Zh++a1Oc7LH2M8PIUtPVQ9dOP8CavLeqysvuu9XkfWeKYWDLP/w3/0ua" +
  "RnPvfXmee2bdrecc8iCDuJe/+PmuOfwpzFaZ2bS9Wxhh7WTqzG46JzD4+egw4rrkbb79XqWHSVl5vVA/dQz+nPePemXerY69" +
  "HbNnV1Tkue8V1q2DF/t1uRw7d0zTJ1yu3a9rUV4/Pad1ZqoYdcjf/tN/B1CiqKFCM8tOY9cfVQ9xJUQ2dbCKFNUmBGUaoGwp" +
  "6TKVzWNyL+M//yf/MYcctPsGXMDQzlY+T81fxa5IwWTte/Z7H11XifveD7SnfinuxNeVz9dEtRG36rS9njm8L1yqEcLzc/w0" +
  "N/TDGGvfal83H6yeby3Wc3WMLDu0ltncKnqm5Cn5yL/6Jf8l62+6/q7pW0LusvD7wcHP1tfb7HtxfeFPxs82DMHd9RoHcO8v" +
  "yjIOld0ScSzUlvJb9/Otx7H3Et+cgfpFbxlz5XbmjfDipbTB4B/Z/ccQ9VptwzOVVPPsPna2CVhOpQlZgtT2Ni2WgdCshlJH" +
  "doICE6ijWzQTxa3/4D/67xQookJ04z//J/+s7I56i5HXwyyI3i/XqrF8Awqu50VZr+G69jVV7i9K9wj7l9XHYOYPs5WqvsNE" +
  "ZftfuI+X/P1/+PeHqyi0LR8pb21L1Nl1Bw59x+d5bCi4vS0gqwshwX66dM/2xzV6g5BbY/JzlNxUTKtPInTolPWdoQcljRi2" +
  "HznYP00d7UBkLTtj3/1V8lNbPQbXt/H9lMCX8o/ZAAXqeArvttuXFRshT9lp19/+j/4D6gNFQaUhrTApWdxTkeohKKC1mQg1" +
  "6UoR6aK4jb2WG8RG9wMZ4C3ifxDJIpLO0ezulqFC9H/+3/ufMw7Jm2tuLY1LPzJfcbe3XsEXsLkn5icfM3FlrsCptlBHxrNo" +
  "XyXf8pTosfTI0Z9R17vX6MhjlbHU5B4yZZDrN5jpLfYM26tapMru/Jmu6qawVj5iqeLrBz7o+3tUjMOfx74uUiRuMbQlM6QN" +
  "Fw+uS3qyuEUwsk09U8ELRQF4ldFT7hkfloguwKsIeR4qLPV7LGWGEJgqeZiwUdY5ogxaMKsWKVNPkyDTBVsi3cQE3YRY6zBg" +
  "scKtqXhSxVxgMG2Y/FH+gu5FdMmQZv0//8n/Ii3Wk5mt9lFB//zBKZ+SubeK7yY+48pHfg4T1ZlVqO33Xdq870yRz7NL5PWu" +
  "Y0AlSo8Fe+B57LgPlpX08NbNrZAvTA69qc/2WZ00LwuT5EOo5oUyT3ETTcVhfzpEaHdPxXqNHbnZc0BkDf609RdlmXqhKV9Q" +
  "8IYKH7aLMmTaijYhAnN+f+KHU+ihpeIRh6lk7X53WASpvd1ve/iolhmApngHqkIoIvAoiBJZGt1aFDS7HbItFyHubCkV9pCt" +
  "XbkLVuzubpKkbBM6DXd3ss3w28VeQAhfpOCHhP7ZcG83+RY39Kxo0R+mNG7pqC9WmEhqqPqU111bc2tkqi63CYMhNZ/W4tvW" +
  "sPqLtivHR9b3e2O3wmSQDNnKwQ62IXaTc1B2zeI2XE21VTO/RTfQLzmergm5NA+xeu14d2GbOEfks+7fH+ao6hw9nwkuYY/d" +
  "qoznfr3HTRPrjS26731rj8Y4W7emgKktt/7tP/3HAQTE0LB6BG3SDYVqtnuJaKVJ/zHOB2lQmLiLAYsCJeloKbSJoGWArYI2" +
  "gXmZlTEcqmor7YDpCAUlwxN3Qv7S+NJeGiH3o3f3Ly4PilnEMOFoJR/xbbDddf5y+PZbOodi1VVVzZNcJ4elaoWe8F1WQ903" +
  "0oDx+K2UlV/U6CiE/ZLEg/NjCpFsVX2dC7/NvrUJyz7+vzZ8yL06YtvYz/KZbstbDsHvLz9/vE6P8jHOZ625sl/rzCXa5pfI" +
  "sxpbiDtVIudLDwqH6aW3750tLr+ucviuAiTT0K2jqK2qLVkCYxlAjCKhu7VKA2xlUbvZooTAvFqG8A9XGZaoJFVKs1sF1VGP" +
  "EurIjPOopQWy9iNTN3J6i8uZsysG3sf53M/5cIQtX2kovzV/bRabDfTCNTdo+ugQyamzJrKPZlXlL3KF6oLexBXQC37o1TID" +
  "jZk37jbj+t5bx+nfY2wIDbaQKvL1tNnh3eb5pSvpZtDH9y161pq0Vqvn3KiU71OQfAQfP9mGV/dgHcJR/sxDP3XkrqEtN3n1" +
  "gzdcnxLf3T38qTu+/liJ3k2xokAYTjSJCmMnNJtyVKcTJuZaTaIZUgIaSqRAkiwqmw60atO09Y/36B2yelYb60XtTJdHuptj" +
  "6NKq3d32c6/IHdl3NRiSfJHDavS+TbzO31WUsk/RcmrilHLqEpkrac+OKSK+3X83b1e0zq0/CgvZLSZ4ft8Rn22y47YOv4Ms" +
  "g+eQ4DPv2P3oXl4q57qNTaxJLgY43+tLI6W2mTGO/diBVl9M3K+CbNJlPM/46Xbl+BD6pIS1+TiPfi99FGKPfkqmesV85f2F" +
  "x5YKjCookQGypFtCUK6yQQgc5O2mbRQ0SQ2R7FVgOCjViixRUQMc6lBhi4o08nQ39dah1f/8H//PkIemaZ2rfJauyi1DneO9" +
  "v4Ymfkia9Qey8Mgj/B65j+H3FgdmRZTdyYGys9btKeoK41sc/pSvVUodZcqbrxTlUxgjJGUjA+e+3EZSPG1riO7a8mgycz6v" +
  "EVIIYQx/4uQ8Wpr1hEg56/W0mcrAzfzslyUZT0NNXlsp/oxrAcI4i/gojzCGjLXtecCff5pqMhRb2/ezQ+Vnz9L4llAImjBm" +
  "m/8rmZ7QklS2FldTvHYLq03AUUmVQIuygDYQg3BhCdOLxlbVLBXjQ1QJ2SqDTKmUluU9zr4jzH5A2Wp19ZXJ+rs8N+zNFj1V" +
  "Vhb17NzTtvb8yPPYIch+hl9DRkvYn378aOt8wA6ewaytfkRvw48Yz8qRrB509D16/DBw2zY2AKZgDkOtOoaypvl+qN3VAtO2" +
  "FEgg6A1bQ/uK+bWCugnX/oPHixg7UdImQ1XqrpgWyZuubeZcJRwmv1V5Zeb0grlsD5Gu9Y/+p/8eWGiBAGmlAE26/pC+QSBQ" +
  "BUXZalN704GONjNNFCHSMIWztwhUFdVKryAKNGHCIEkIv/83/1c4tMgwy0Zavy6Whqy2prjs0Zvmgi22+JxyiCyY7RoKtMe5" +
  "0SfP9jt3klAtN5jTC+P5fJZlQ+X5XdA7byAMtGZKmH6ZsEOAFSWmyfFaIttMX12prCfTDTu0pYoaeJqxhoDkE5+cct//Mna2" +
  "icBfyRoiz97SZZXRT9ey1xXYCqKcd+alEfC/QOcIBfq9niCVI4HdfqAkzVRUCESjCtJqNdAwpYGNIlVMOjMliG7W6AVREOKq" +
  "SvQjAFS6G2qlyxNqAnGAKSLKbkHWbZCy9VQGHfKJs4euMzKc5lKq6rW3sd75hVOvMKBsbq30dZem/LRrtM+oKQM6H2Jlj2mY" +
  "b3V+YfK5jpPPbi5b1ZaHqoqOu7XvnXv4UvXTrv0HMpe+7AZEt2lVDTROLfS3vuTax8bbcnvr5iHmKEfuvJ/rB2M1feTLpM8f" +
  "9ylcZJ5bNFUP3zbCoqvz89JnFjhLZY3S3dw0t6qEEjCwFPAWN6hoid+wnY1mGlvRhNKonUJT2wWiIaao8t0UJaQSaG0hRKrR" +
  "Ra80NS9z/ov/7v8yjPv4PBKpDWkuSKD4s1d9NrthGxEH5GVucdsl37Wrr/FD0h6bPdRo+OK+WfL72bmo9QZkHs9jLWV8Zez7" +
  "/OqfOs6ckiGi8hzen5uSppHW5sL1PPbLaAoXRKaEybfMpwtBVyyq9w+B/KoLn9yKvunZKmeHDCHOI9p7/2pNW7zmGnK5h19V" +
  "2FsrtyT3ndIpKrLdZDFnfM6Wjj4bLTrNGEBliSckU9K0m5kd1oBB4o89qqYA0uomEMEgFH8obqnPFNAVLmqiqS2WBqGiE5lM" +
  "+oJcdl96vPJ8rS1jqLB/9C4d9uJr+TjNRN76+KXcc3XB8Mz80XL85TeYH8ezdnyP21eHr+bUNUvUP6A8MrC1Uu3RqokdoY/2" +
  "A3NcJdzlMW+VepVkc+i0Aa2nj13DP7vpSaeoajy9YE9p5u+/Q26Rsrv27BfEsyp79ZoO5GcvmffYl0PO7t9NN02+lBuWky5i" +
  "77djWB9eLQmbcrRqmoTp1J4rtbUUaAiDQ7wcopSAIMWlvTNa2VnYhGhJ1WojBWhSVAuGJK2oDaWaNaS8TR1irRIcUpY9lx++" +
  "F/fvX4eK7UpnzXoyfydo3OS1t/qOx6RPdGPET615yHHoytV9YoxlbBFO0fHghum3i6V/RJRy3K2iAHBnRBnZt51TVK2thjG/" +
  "M+Ko9PZPpHj9VOR6azX9t+KmyyfG5P5T+oOh4RShj/apYYIDg0Dr7mqixFwTR0jssFBTdjfmTBq/Eq8n1/bb8oIP1JWX/gQ2" +
  "1J/8pMq3/u0//fdEt4qRXXGDirIGoEq1BktlZYuoCru2WqkKQbZ00wsFEwdNDLudvVtcuoHu1CRSkkmnCSZ+e1qHdO+4O0Ll" +
  "eyU1+eeIH8XNe5hD9xov0td9GOqrGj/Lev1YQl3c0r6lYT/PxXG+dekRWq72zA7Ur31LnHWF+p1hSjH+0ZETtjYkylG5uNs+" +
  "dndaAcK7TflXb4HTj3pY/h3+7iPuHUUJhtzZtFVP0Sic8gV9HTMfyaOuauSWb0totHIb01Z1e1zkVK8W2fbGlNmmvjL95F0a" +
  "yt5tQsCdbQ3AtkpDrKSjsUG4qrn20NDO3qVWAETdNtvBBZeWgrGrpZqggRC2iYVUKMEN6TrFm/ql+3HtJZvzeFHnXb/9Jcow" +
  "0DsZUX8H7NfrcflRZM7Nhysq55S0WGGOOr9jXatfbj/+9Ct3lrugLb34SKkNmOFJPYfKznIrPeP4DMzrpwwHKGOqNTmVcvjq" +
  "XJ+dg1AXRUMKYxXfcT5+X6XmGtxLQ/PpxFzZvoAoQI7h8vi2C3B4ivqL/Wi2vc66izjUW+5SQrqWmwbSiIyv//q/ZSpKBYBS" +
  "daIkW9FbKR0cLVYCJQyEQlrDvIEq0tzYXaqkQBpqot1FEbXqdgFJ827jP/8n/9kadshgXdRhajrhnnW9Op7SF6VVMKZQ6WNG" +
  "122plzjCR/W05iMt4yR34NryJkf2fqugveXAPd1yhG647rsoc7vuOx9iWNS03+WKZ7X9IhXlyv27LlW53W7ofBzv9/ERUTfZ" +
  "sYY55Wv9nkurncPv9XsfIo+8TA59xHW7qGBrfe9NLRN1g3J24Vsq+BWfXDjnCNUFHnrqXu1zFlqMdFQYhF1/iKUFAEQ6JCWM" +
  "ogZN1nLTlt6QgqvqlqUoC7GqUncQ1F1KggWLKQBbxRrWRDZkM15ysJ/7w2NK0Sw1kU8fP5aUB9OEgDwJufvZPxcrqkZmKra0" +
  "P4su0LzK4kk9tQRjz9alcvs2NM7fGvKTcnjiDPT+LR7zH3LSXEr6OZeIWuyLJtbth51Ddfqec6H+bLMW3+K/PVxTJOvz8Pkq" +
  "6bNH2Bq2DxW1Fy4lVfdiRGXNSHlV4dSUKj5rQwOqxvxktPfnZ+0HB4zyd7Q+VH/6kVrA3/+f/NuJLiW6u5cKhehSUdGmqjSa" +
  "EJerUHCB9N7VSkqZNqwlMmlsaddWAUJt5xazMkmVFaowhGE/Ocv7y2URtNryaLcdn1UzNNV5NN0h8NMMJS7w+fPA+9zdKB2j" +
  "Tfhy1TXE0l18y5Rpqke5HNZ3KP2X5FNcm+3zwJl8WK96sMrsdjXd7QEF27nyg8Su8WHvn1vaG/DvP/sdK1raI457ul5WK/yp" +
  "X4fcJYl7fin115YqHbG07RHU1YoROr/UBW8JnqqlpXJGu/3+lOV+u1rfspO+3QeDQVGaEQ1TQQpUi8oFobAoqoEOFZPe0RT7" +
  "Q5wtWewU3QBhRgNdiWJW4EDtYAjSS7TbqjFVGSn31sxUlWX89lYASGhzVU/aFo3d6CnPenqVCH7+VlTvvjWH5IPPdRWe+MQS" +
  "MGV9603twbtd0v37g5fiPeBPwit0D0lrsyjOIcmXdgm+IxTbPTHo27fxvTfuEYA9+vpEq4+aepsu+IofyfH1VL0ONg/e2lhf" +
  "7d5bpx+PWWVrzxKxb7+hf4ePPybB3pbmQ77gFaNEjNh/FR/YXW2b1f2H0kjp1W0N0lE6uPFHKle7lKWE6aMaUgqCpvrH/ijY" +
  "ZAFiu6SxCfHEH34ss5bsAMt8M4pRbdtjet2948cTcZmGIT30JPohNumov/tVYsK27SNO9auHDpVabjKOL5Vdx83MAjD0wGA/" +
  "Y9Lk53VGPCK9QKlxG4z93GmhbF5bBrkQer/uffsRVNuNtmn2wFW0m66do/O47lFdd6lCeYutCvOGFM+Kn9Wg41kjv+uRvufX" +
  "lLmZcgc8MTiyvVLGUg5dW0OfadGrcMZvoe1K36oCBsTEROCUEuUfkYGIMLS1Tb3LW4QqyLu7KRQgGyyDmQKu1WUmUHgXVYQb" +
  "iQ2YU2n/xb//n2BK2xNekJTcx2volVqnSD/fMCvrPdZIiG6NYznNw+O83LC/UNZGFTbWB1RXxA4PWrviyBf2UTgu41J0kwYb" +
  "9vuBXZZfY3T2BgQ/10vqsD5zbIet+sNsvTfR3YhN8MR+bZeFAfbrVLAgI2vkNu7qQzjybaxeqbprpk4JScvWw2Vu1o8rVPtT" +
  "ofX5oVG3vPrac3GruLF+/YvMx1kT2qKlTaE20/4AIgWBEkFtNbLRFluaQjebQgJRpY4mZKBFK0l6sYWTzWJ1awcAK6Ke6mM9" +
  "G5/PKySSY1WvLvrBFn32ebjd79+fsQdwPL1Vpbv6+eheEzd0SWytWdND8adP3G6eP2pA1Jf91Y+/7tbyuiwOd3qI7KOCcrWZ" +
  "JdC4BpQnuh/Mgkay46oZSDG7pK1OkxZFx0KnhexDeVuw76QpFX0BuqHQVKumdkizZZ8BAqOUnY+V42hPXVo2zyOkPuk2bKZQ" +
  "u7NpxxUP8h/8j/+dogFEo1VUQBGhwABSgRJhwcyll8JNIKCADdKkmsMV0ooWEkoTkd7qWuIiAK1BJTz4/b/+v7zUmN81j+Pu" +
  "y0uJadY6Ci2bnNu6dW59/PY2AVRFtolm8CxpS+PciunFVLlvTCumV2n3zRj8vJzSCe6r3D74WT18iY1PjfSatmuECjIhT4qt" +
  "EW3MTPeN4QSR7bo0nVaISydv9lU/Zjyyvf+kHUeKNVraTXBX0e19la08ilNg0la29e7M/HpWfT/7Cuj6/Nx1913tKCwsl0kO" +
  "NaqmlRg80QITE1ST7FJtNBzFNuvIKhalWqBaaeKaUEnbsBJRKortmi0GNMS6pQjY1hbWb5k9gs+m79cebE3T6o+m99iWqPdo" +
  "Hjr6q4eomf2MMTaLrI/yMrn3OqW/sxJbvoYznkLy1GiV+4KUOsgHPuzBHF4gpK9yA7XXDeK+4OZgvFdPtjxm3vlyolBm5UL/" +
  "Q5MCH3d6dP36+pbHVW/kri3xh1ZG1q0e8TrIrZuz17Za0q/Fsa0heziP5eH2Dt5+2CGmCkTFvQ+JW1UAojnqyIo0aKMoWa4G" +
  "gXYZNdiWLHX6HiwrE0VyqHY2iFJRpEGLaCWSUNlarigRNxS3UPJ4uSFUQXD4NYYO1UVVt1FYb9923A++sTquIdtYGDc2BaZw" +
  "5BTzIRdCNBSjmFzXtBB7FGK3eh3k/VjPs8o9vp+T3s9QUddt0ocMeV5j5IZv1ggDEya03Co51BlDJR6fSUkTeBjy9TxfViUB" +
  "bDPNv2xavfiWaWu0Xhp7GPAWrzpgt3Wmbp1j4Nm+PPdjZa993qqb0dcwPbj53qyWcgotVR9SVdFB8UyCBtVWbqoMwSrWUYxt" +
  "pWKQ5o5JQ0k3IJACKAjCiC0tkFJhJoX+L/57/4zXdtmJprFbfNwTe9cuKqz6vX8zUABJdx66QzCooTCXncero0BpYutBiNex" +
  "/PExxDRUHxXvPeD65R37ctt5n9JTiMN1VRt8LM8Vczwh4z7+UI0Niy3S/qworfSuvTAboUvupuNJfUy/OU+R9xjqxldIySMX" +
  "njW6emjpBcOdl2tVuB6ieRzbq6MV7c11YPMu08NLNB4VOTKtlewWCmECBSGNu1ppoG20lqi18SFCW1K0Rf84k2JiXGyDdA14" +
  "0ez4YwSvwmFcnShAVWGZ6iZd8qNUOQDlWHK3smwWF91SI7IpY8hs7u68fX9m3y67X7a2lUPLW6Vu1Nm+pujiZu4P1NPXKRc2" +
  "MBVO2SaWlRURq+UXbrVHYDYL7buXP5qGQxfcBd6n+tw6hWrcezyPeMy1Hg4Njzxbc137kf1so6/d++Y4u+y1z9UyY/MI5G1H" +
  "8ikd/Oi9V1EhXWGv79p+nJ1XNT1VigTsn/8H/2kqAZCgpGpVQXx0GCSHGAYJ+UODTi1sirS0qnhKE95ldOzsYcJtmVVsM5QM" +
  "ZQgIpsCMe6npurUtTH1JFe1JfW3d7SKPbZYtwdPyqR4FC1kTxwYgzJIWq8wVUrl65LPa1U6AppOeU6Z6cfFZkooUHMuOIZvN" +
  "wsXQlhxtn/q8wmVa9VvwLTG6j8Tvwe9HxZZmaIhyPFIFeS0+OJ/z+8F4W1fFQPWOlEQ0y1bGU/TRxRviRGMbXlzye/jLug7Z" +
  "vz3yCdXqbnkDN5lHYgV1HMe/+A//2cv795RDe1v+g//hP2Zt/a9tWms1/BLx9X86Q9ENhhGFre0pbSZU6U5QhF3V8AYd2Ok2" +
  "UpcSKiNrr7RfInno2tnXsN5HjyVoEznKbzfXFD1UL+YI9q1u15ZjDx3jWfCJric4haJ/3c89cP7G/hJ23m3yj/7Rf/Xl3JXf" +
  "0C+plRNfxN0V9SpbccnPH+qUuJ7+Ze7nwxoSIjTiqj6iL+H5uCgxarPFx1rrLKVi0VLyx1CmTrG79fLby0L4B5pa18F3HN8f" +
  "TZWwJxbw9vj03ZAymVIG5IrX6E+1kOg4e+05mih+a/zw3zuPzTjk2foP/nf/TRntWzdEuEQ1ISFMQklpE90tkm1mELSUtEsl" +
  "HELH/j8ObbSU16DL/+t/8J+9Usrk6ho366363CnnHLLz0X5xLNwsUdXboLfqycgnL9Ufak9823NqeD9JaTlb5Vib48l8LeZU" +
  "lvYZ18LPHkMkSfe0exlUKkbX/Msv9E4R7tD+lHeQJg+8SkR/jQSm5OO9VCmCOo6qs24fAR0lnBjYZ8T6TXsBLlM3dlZkz+9T" +
  "rH58bqjx2LRlNfh82/b2kB6XSvZizrWfPUI0ujT6frngBlPpcf183t8B9vPBTCGbu7dUWFarwFR0EyCbWuiGiVhIlzRSqcLW" +
  "GAlpYrukWkNmRwNF7G9WyqNVeyi2v/lDBfsvN+Y49m3/SlK1lqiE6SXKjw57WT36SY2OVBbfreN4fg5cNe1ze1u/xh/onWKL" +
  "1fus3mY8BWZbumxk/X8Y8vqmYFg+1pRxJfsdYoOJXe1Pdw+tiDNw5rPHnviUY/yaWYD4EGqnrSd/yDKr75fo8Q6U5jFyPiZ9" +
  "wxpPFx+xPlaZdo0Qa+XYInPkeVl53veWzUO6ZJc0ZYvuuUz9+WX1lFPj1g+s0JTu1e0iZSK7VKCianAVqKAUU20ZhqJFPLsD" +
  "baLRjNQwKVBRGt8IMYiKFrJkP3+Jj+zEG3LhOQTykmH3c7ZFVYfLtUy0ZepUf99ycOSzai/wc56F+EC+vnKWFsUFZX/z668i" +
  "srYcKltq8P4ZHvIUxyAKCEkiIYbe7wk8ZrbEh2sqq48Z0lxlK8YUvYCRnkOmffPz3tn2+iNmC2M3K7gq3VyzZYrAS2QAuxRu" +
  "kb0YiNTlS2XopNwJ/cGWilZGF3+U1GOdfEdcxJd69t6vxucf/B/+bYDUoZCmikHZqg4BWARKW0Ul0YviqtViUi1OcKYk+S/G" +
  "H5iQGsD9l//9/w3VVlpFcSm1EZdwgpZZjixWsf84veas6tcflymUqEWq7t0TRo0Gpkm1q97fkqOsK9VNU+RZRbMPlguWvY+N" +
  "hg2diZ3kA2E5V/iOz1Kf3GbGytQamPisJdS9zDurxNiduvJePsZ+9/Ttuwu5tHcd+BZFIIcaWMmlIfXT1V5T2Pc1hhUeUe73" +
  "bshT64ytv9eo4N697YXfLWTW/NV3Dh15mQMRi8KmgB4ErVUENFKKm6gyUkVKs9kuNrQF7ehuo+5MK0DlX/yT/1TI3MxqqCCL" +
  "kcAz1M4qil35Z0O2brz0Sm4YtsGG7ko5bd5tabYf8R12R9XR6wX0UR2rWTp4vU29/T4PvbXdGjoG1mMxgGdLv2x+jl0//38a" +
  "7qIlyfHWfSfNFbtvuUdHxY7PlF5Bd01pv6w7DxbpSZl2lDz9esCdCFmmpuL3hGuWipsuTp/IsqEyVu6mHkPys7RXIzxyPuzF" +
  "dh/iCedMLjX7XGLnz96R2S/r/VN25OGniKGYvhXapHvvViO2ioqgQKeVlTV2t1p0p6lJE5JUwJSv/+K//8+2KFhRYvL/b+lt" +
  "XnX71vSs534+xpjzfdfev3NSp6qCIhSpIlIeTSjQQJriVzQUVEsbScdESZmg+JcodpIQS7QhNuwEtLCCUdKwoYKCFjkg2LWh" +
  "SEx+e6/1zjnG82VjVX90J4N5j/u+LsPLrge14HHLg8NLLm3qt4d/bBVDb9XJuDYL1XrVYYPoPHIV1VvKB1qYd98z5Vb+0v5S" +
  "oew63/I9+dl8O2wIDSp4sNk93jmOf1RzPE2P8GAXKR/K6sSbon8Sp4XN+Mme7llX5upB5zW8jZ00sOOpV+StjKmjn6NZmaJ5" +
  "rsddNmzMrgxDHlcOkGbTADME34lV1EZn7sCHfdWvE8x+L97OH4zWSDaiSUPE+Vt61EGsVP1Ch2ozMwdaqooYFULsRAFzYmIy" +
  "siBmnoODSIo7BFAuATepB0ZgiCCHBoqOyne279uv3ukNmlfx3hHQ1vd3ATLzMjVFPZ/82pJ9p3XAfrQM7rRN6D7jzPIdAkjq" +
  "fM/b0i7lR5+7v1e9cQvDxF6WHqcB/L5ThgbOVyAgl5KPw/pHCrEs+XhsjKHHg7w/FF8IEQ3iZdPyOmzpTv+4v2m2zNbCIDtz" +
  "kn+L3vcsRsYtik1E6dUhKDXmkB1pLJZz+nffK/neYo22wbsvk8x4/mhXp9EjztntimOPwYSuT2hpMXFJFTeDCKD2TylUbzgK" +
  "KI8kYkY2IhtRicomp4pj76geHexS5mzdIv4FUbOC9jHmGa8pt9k4wcLJX/zt2pv2oueb84gsGQRdzJnIydzyitaVykG7xy7O" +
  "zEkwdvNRT8GrK7Y7eoqxUpvTlPQeM0O6OfpJfXggR1HsrjWus+9Kz+OoCX8tA0FRP7h/vMTqzWQCE1ZSoSGQ/X7T3XN2pqWk" +
  "yqMqyCpTZRNV+aXaQ7+0puB4u/qwckFOJLlyt4NFiw4JykbzJK49eqa8zAdJbTCAluqsToJLNAmciAlURCqRYEo2ki7zzQ1l" +
  "gmhlVTAbRUuqjivZLST1Qc1DaPVUKH9OdsZ0ni8nvTfn6R+PzefD2njvbj9GJlX40ZCDtcHE0MIX832owZUEB3npi8fSaFlk" +
  "mxpaOY1rlOdtwdEG2icGza7sQghn5UNFiIbPOB6wmSXTnKct4aawtvrp4d8pycsecXxQUu6jbJ0HQwcSDLSBkIYqk+pO8mmk" +
  "w++wXViwri1X0aJ6s3jweCPCAGld9ewlU8fG0bdbBsA1WN7bMaiqmmuQErphi5urlAnePUAESDcIiQatGkFdnHeUsgyrGXmQ" +
  "CmXwkaNvevd19Gw8VJronhneWZ5F+2gTFsiSR3blypWvHC7cLHzDtUmV165Mv4/ufvU8VrGMIJam6mty41p0jcY8vp4kMz/C" +
  "X64jGMRau+myrAjhlDPY1eaVBMqIRdfijvZFnlRBE47RibmyH1HOvNNEnIhW7HUwQgZ2oXSk09IiG5RLkrKfaymDK8EXay1U" +
  "+xk6mL+vZt6bG6ukDXbtcaem0Hsdts4aHKyypZu7mVBcyUXMmi3cUZ3JYrN3UsPUUF1Ji4WEMKSJBF1c1HphvqLeNVE3qE78" +
  "VPWiLOHcBtGlx5QiYMohVQG5N+m71MBJk7+MPLz33cEY5aO64D1KWIAWVsh2u09p3K70YN3ztvgK5O5GkG6b3Es5c1eCzuxQ" +
  "KZLeK2xILpAp+Y15HL7wm//9X0IrqgUuzdmAdqUK1f/8L/xHXybdLzssxsze9OEpCBNvWEBqk3mHFggNl8flHw/Tu3PJ+Lr5" +
  "R/EvH8MHxYyoI0c/uNfLeQzh+DHyJ0clpKlFa7+mAIkkWG1W7mL6zHqYNFSqFis4I0WqDBJHIFg5gz5dtUFOXsYH2BYza7Os" +
  "9f3MkUIedLTsrgfvq6yG35fJUzwriH9KO2obfAXisPMlLw0uhjfpAGhgb8zDs4uu14FBPadlB3791359TGwilt4edJPpMXjd" +
  "3WRVPpg+c10ktPEh/sXNq9Y/9wf/fjSI0iKTTpq7ggkJpg6VUb1QEr/4c3+9DNKaK1pZB++PbafkLqcWerO8wFyoTiVLDi1Q" +
  "S1Uk4yi75MUypW/Ho1adVGGP1fG0Xi9nG8SLqjQUv/b3/vVGtCq6SIg3SKiICcRS4QRiBgVKs4gM3Bs1WhzJxP/vn/3PX9o0" +
  "+EGx/Vmx9Un5scsGcs057mxDph/DLt8aXaMtNKnbRvPuhG4rEekrUUUyuF4pUygcTPmYWO2cZ2lZQcTfFUXvMUZe+SwC5uyr" +
  "A3fTOSfXrQmQJDklsCOs6/qt/+Z3uUdSQpJdSJHpWihr9s/ad1R0g4rwp/7Ov5fo//Vf/r23GbroG8FI0qWMz83Bl2tj2fga" +
  "tdbqobqE+jITEtb7dOrkd/E37m95DPOk2qFnOBPb8N4GK6kNG83Ejc7uRkBEuiAg7yAiBhrIbOYkV1bKLGKK4pSmTl7M0Eyv" +
  "7zTP40Uv5+vYIg9x79l9y+beol897yQTlpHfIVaDOEAxIvdxfry2gQfwXd6xvx5HV0Lq+LAeL8txH+G3NK0e6BqsZI96FZtc" +
  "w4ojRmfXjJIdV8lKxk6R0WPF1Il/+r/9a00SFSRdwVnsW1TRHdhtXJVc3MlF1NKUneT9Z37/L39PfH87fO98aFHItoVFh1eK" +
  "Pnde4SGCjtTI49xXNeV9XH2+/ph3j5gxQX1t/kj7OLccd5btWchrmhe6AkwkSoxS6m5Qo4saohRVzdRSYCIhLUIwgbqkQhvM" +
  "HWr9EHlDn9j7QwsShEfyN2EZlEWiml85Vm8+MpUW2xvKa1fubPcueQ8mb+099Tm+jlnpdqssA+0rpndIj4e5Coh6HsJ1RrSw" +
  "aeMiaj7bpMoPzr5P0hqvD/aobJlRP//bf02JukgE7TIYSkHWXlIkrOGkwGduJEJaxAOt3KX8Z/7OX+3v9fYQWa4w4ONIxnqM" +
  "kSuCjhI27epZBWccc0KHx9saqYf03l8T4PPJDwt7l+VN0rss7bzQNorO5gzy5KYm6mwGIyQ7k5jQ1LynJoiRQilosDCIixLR" +
  "I9Ov6A1J7yFOJj7aDfzjuD9qh3bygKLoceKBhnhSdloPRteZszbH5CNfRv66k16RZbe1p61nD0mnVRl3Ooshac/gWkkybUXJ" +
  "w8H+Sm6Rpy83vfHt9B8OOa1vvv/03/1dQTK6kz+/aA8O1m5I35Tg0gaSs0uNuwnN3a0BMKJS/vR/92+Xi5ugW/qN5xnhnkqm" +
  "ukbp5cKjoFnlXd/H8j5+LDTXVX3QwEdxVxGL9nSX7T+wawWKrwv3RxeMjFkJMG6gtBjaoIEWbEnyzS5JqP4cj4G4QSJMHCcf" +
  "qjKoB6RaOunwLlp8xCFEygKPyGnaCe6lLLH66wzzpI6UGM8ocdj0FCT8q07wIYA2fVgLGQ5+dB9TqqqZXZmMqq8qkigIia5N" +
  "GS8l/aAmiyNoRMioJgMlghLk5dXSxCAl4SZlcGYCnpyM7oaWQoOiC8RB0paS/fM/+CuazDQ231sWkKw9N9+1UEcJ8e16Ckxs" +
  "3Mdh+6i1CdIWtMOw1uAEJ7E89YvfVdbpxm8HvwHGXlTbhQhFHH03RTIkSJrZW1lKsylLpImTnUrbIrhUX/2Cvz6qgjkwpPom" +
  "KVbjtc5jUC8izriQ3v6dYnV0xMWdzZZyyYFrms/0NWfKw9lTOz+uOxHMlF3JnGmPjZ1VM+OjWBZNpZp7AZJ05qEyjsc95xfT" +
  "EvtA1Av1W3/33+3FpMSkLApJKhZJeFeP3s1gHs1iEOoGZ1UmNXW3UEiVJZqapWkAFK2SN5oncJeF2rRsLImJOzuCViMvZ5hY" +
  "BQfophys500dceLWV70PptOhtmu7XmhnYgZTgIs0ulUJn74cJDVXCHdTg0HSBK3PnlJHWyXzSf3l2VKYE7uNH5TnFsrjuKpg" +
  "Yp0qRbBl1Dj2abPa64My5Hgw+kna3UJXMd0M99jyNgd3utJ5EbfbB1qUZgix9uaX0QpB4c2pqRYRVb6n8kcGjfCDtN44vbLV" +
  "ibgJ3S1EDGRySwsWCzeVUyV2V0GyG6CO2cYIMIQqkySr6Lf+q39rN9ntbTILw5/NZmV1OIkTAML6kk3B2iB3J2Z2E9aoVZxD" +
  "8KJZUwYvOOHkgbR/7H/8C9K7OTqIs0uKZBQKSVzBjaYChZOWBHctygSBqbtEixvN3l0bRtjZShEX0gegFZP6ailTavO8qtUO" +
  "wkU5cpxvEA2ifPXN3kVKBxfO6XP4oOxEHj8wlwmirnFFRS/iF+gBPgnNXoSrPBOlwiUThdEMmHhl/zN/+99BMRpUjvZiSWHP" +
  "EElNRBeEqpiTJASp7VZaApHqlG7qJiYVFIzQKJPScTysuyrUZ/fH3K8FbdJSaT/3+QVUWVZ6PNJyKps6prUhTxbx2i/Fwc0I" +
  "vvxB3iMU1h2GQKKIy9WtkUUoBAtPkGoLiKi7hvzROSpFJvGt4MhZI4MkTU9L/WTdWCV/7YxPVKGwybi7ztEPsbw4KCQqjNkx" +
  "AHqsbI3rUcgKaSWJO6Wp9mFaZqoyVT5x7g3WHTwJBx3S23MYv/o5965B5WoaBRP1AH+28Lg6+dMZ6wGgrauJwB2tTF1KnQQW" +
  "bqAWGALNJAVTAdX289//3b//r/6N9FKSuEdwCNtpI3dsCVU9c7/GEI8u8ltBfETfT0Pcu6XMwT2p1wgu26161//1z//HlTY/" +
  "h5nJZ3U+XV7ivEdanYbrxuDMzs5/4n/4N6d8woWoGuhqsT413yk7NizDIHfJ1NftdHzM/LIoYlBlNxklRhNVOComP27xs0fu" +
  "T2lfrYdwODxIeH/s8Tby5h7g8tbhvdmRMoes0FIaOO9FPckvMY3ta7DFnEhIseGHQEoygTdYEJ2JjalUfQ7cTpkt4C4M7Q4Q" +
  "N30CBauaBNJUwQQvtqaW2CUmjI2Dzthbjt7SUTftr3IuWZT3GqPyXZrZ0AtkzV6FAI+BumlTfz2674kH+MPvQU8+ou/e/ODH" +
  "8vbnd7sfipwQP7rd8daxa47dNP/vf/G/1Dtu66M1sNJHV8gJkeYqDG/nhDRHGkwvup97XHpoEc+uF6vIeOIWfW4KTQl7nTmF" +
  "vWTgan+D85i0weee/Z1sNlZtorG9THxufbWzDrZWz5avThTn3KiRw7JuvorZp9Fv/Nd/UaQoSgjM0QXoJxWSk8pZQUajW0Qz" +
  "CqQgaRGOJurmQlcHSUJMaAklSBB8UY191d4qF2kpbM/9fN0BErE932/yL4UhOWkar6qp7arC2WnyILleUe35XjSYNhGN+12h" +
  "vHoPdXsxMddGLEYIC0totVzXud+nvzcmDa4Lm7ypNmtkcTCkNULeJHsXL2Rz0azhI0C9daRyfhVwabwm7T1InCenLFAwoZdw" +
  "Lcrn0ZfnZjmHHJsii+k457IinrzGnO3Zm6/clVzviV2jxJXUHCo9e5MGVUl3CfNIqmZmlUwBOLtB3V2NslslUWpExEFbKUkq" +
  "iZmkAFS1VGzUBHFrC+8BZLYxjPCicXOrnPuNRqUv19SUusH0Gtu6tyRHtMRWh8r38Z2qjR8QGpRBeVrR0q8qoib1ntCDMfL7" +
  "kDLNvil2pjF1j6oBS2rnWph1tymmLjt5paB9xDHHj2UZ5zwXsiTrLcudCyeHfRTWKzXDRWP098iD6wmujMOP3erKh9K6c+hR" +
  "0ceLUnFwSO8P15hSXhRJ9UtWygrKCRdRm7dSCydkr9ZVmtJM2gpwczKaNtClXSWfP8TMRIVaVtSO9k/fL1NlB6OAJpSwCpiI" +
  "Nnt3SFAT704xmY0sOjJtB911rENEj/wUxQhxzHnVqkA5TAipe/feX19H9yRyLVTBwjrSK69Y9IoaX818Ur/XzKwJ9Qc3a2wr" +
  "M5GBhdOTaROYHlZCUW/5wkRXnak7yNrfjh9X6TyqdlexMo2mbFcf/KQqV9nIejx6Ib+Fz5Rbw/xsa395lx98A/drEoECIodq" +
  "EWlQjMGL5p4UTHWOrimWtNRb+XVeOA6pR91xG1H0p4iYtBuVHESfveJuC+9kJZWoP7LkgSKSnCX582VbSbyJuoSYC5QSzGCW" +
  "ISy6g6FIJRdJ9dr8kbUeB76Ez5q33ft8MD0gj9hdRdWPNd62HEpXx2YuIb+gt7KUnc05CXvLpo9Zg5WcVtXhbHqhC8QVFQ2l" +
  "TW4ki0BCkOxk6hJwSc1NTGimlI/1Qgxvm8IScEqZ9GO1GncStzQF5IpBbzGEVsqIR5yqQ1T3kGIaAbIdWbSCVPNGKjL07v5Q" +
  "5hkLsRGu4jdwbdxAjRf5fH5RT/vFn/+9ZqrqHcLawU0iaQrtTUVcsTc3mJgyOKm1wMzclER5fYIEgA4xEBejtZz20SukctJe" +
  "EA7Q1j1fx5bJh2f4mD7uqcgXES+n9/WaKgdpWu7BF3jSoADL0jmdMj5mC5MfU7vQJndkyuNh7a4jHexKlk5iPH2DG+Dk3Z5R" +
  "xMmYmj3Xlrq1uHaRnv0TepsM9vTLFoGWysU/yZ2bwLIDFTtiyFYvMEFrvf4h/6MqJUlPRR5BJS8xVYcy14Saw5RUfAIcB5ZT" +
  "DAr+AY2fShD1EdKcdGdrV4VQMSmATAFARLIri7WYStQ0uBkcKi1KJMWZyuAunl3d1c3ElIoEEiEgWXXUnQpMdVlzQHr2KMoV" +
  "3dy3FN2gTV9ntMSXPU6rlHclrc23Cak0nVHrZim3r+268bFd7ssPkukyhYS6lzzwncWWPXLeCeEtV7WQlhvT4E+FrCjVj+Xr" +
  "QAC7WhSv+tiX1CZuUCIBxPBlwg0XkerJfZ5tuFWZEqvGvcYTcahtCdIhp3uyZM1GtO4gNF2BXgPcI0m4m3QG1xx554N7Ei9a" +
  "TR47NfTVZANNg7qsGYmmHUBTl/Tg4nYq4QxqCnA3qCU37agCo5g+p1ksRJTW1IT8w9/+z5jIDHVT2WiN1Eotkk+Hg1zKwiJE" +
  "9L1r0BgPwwHpcfsWpZlO+UHwB52wDfS3GFOY7eQxxfXyylLDzhAu0pXe4XxDDcVtPKMb3LIdLWOqjn34PEtGcvAMA/xhz37j" +
  "IuyDu5lEUnUcr0n0PClmR5wLW6ue7U7Hi22Rck1kucahvZ0gipuOC6iWlvKjG0TdAAcx8Soh+0GBbDretzticvUgmUQUx5Hx" +
  "SiYv0gJ1B9EcVQxCU7YgWYE0SiptouiWaGblApKFuqg1qpz580qvUostpe18KSEbF4u1bOpLAFXK5yzv892lZlD62s7hq+8W" +
  "O6W7WYhsiDjdwgrl81Eai+VDro1iozEamQ9qiq0S4Kfa3BrlcFoGlXRd9OQ92Jf1SzasfuiS61lljeTYenynksoI5mcYjQFv" +
  "XN4rCatZ46gTfWwM5j13h+pKI1lodlS0V9XWYzEvO0MFnanzoBkf/CKEM5wsLydPzjKRICRLZmuA1PZrDPn7v/17IhAQ0Nrs" +
  "IWAIJ3UlGAUkAa1Vhcp2uCQxqEd7ZrYkKHp3UFBBuD1sxcdiVcolkSb5Ym0uqxjjAlCt8v1tphTNVL7oNevRD+3XS7qdBBMd" +
  "NyXYQyLD5R0z+62m8cNz+BUEUeA4KFNbPjr2G6aUIU6siMH0eBWpl9L/V2PJgb5X1lhp+FG1Tv2g5M7DjFlTul/7ojrHsKtj" +
  "+Ggmv180SJikJmn/REN6GU7z145Q8tlG1Meojt2l6/Ea+07RHgPFJPLHfvkrmkeLYd8YgKCzJ+v3Z1OuKVPgff7Kv/GnmiW7" +
  "igxMmZ9kZQYa2RiERKloM4GBhjRTUQuxoYm7zRioQv8fv/03geVaI2iAQMPm68agKm4Yb7Q2grZZaJstXYcS3yDd7AMdB9i1" +
  "6xKVHl7NA1U5GzGaozPRe5FwsJd0FbFpcHRYpzy9u5J61umdfMioxNnBxEHxAxWReA9Bb0AMqG5xER5Fm1iOxneZWrs4G7OY" +
  "ihxK6IGxu49Diyox+JAK4vliHg5oJVnaJiXyhByR4Qj5lV/5pWqWsb41Wc9KnyckcHHxoIO7NnWuf/Bf/C+/+hf+2SYIFypJ" +
  "SIlaqR2MBkkzI0q4ixnUxNTFABVvYun6JKDyL/61v0WcTcauJlQiIRVrcLGNagTWwGOLnyx1PWA3BKjM7MGE9TAeiBqn06UX" +
  "2CbTCsq8SwwcBONPoBiRmpq+7/rqGXnQYdiN26XYsBloTSO6X6W8x5SsJnHmPII8s6ZB8mRlL4dwX92CdaRk2QJAcRzjHqSF" +
  "3W3Td3qhyeFoxiJ6SkkKKB1QEeAisC2jxQ2AkqHMfrH1TV+/8Fe4M2O3pOOhi8IjSqWttKH/25//6/SJmxIGVXZ7EhNBFVn4" +
  "I2tEN5FSoZrQhKAgDTKACSnURtrWVaPXnoO5xq0QIO90m65yxv5uxds58VkF75qdatycj+tDPpyw3w+ucq/6XqxW43iop9lE" +
  "M+Z7xc5y371zjLqGxuyOEPY5J51V443SmAkEU/LieqHDRnM2Nk6c8qhbet1VJQB2NYqcvrSqE8/omspXnu8OrjdaXGAIuEr5" +
  "SBTY7mD7hxxMVfqe3kJEzcSCt266+WlVKr/0s398YtPFSquYPyMDHcggpiwoJGRo8RaR/+c/+Z/++F/8s9CiQoGl0EaU3AQo" +
  "cROIGMTE1dQFVSbiBDWFjPG//yv/Abfs2pP4YxjfjURWjDNDrKiEwmUcikDIzdwpyfvRXTa8EBwCf+jhoOsWeuAtTy4tvluH" +
  "jLqX0b7rZGl2dbah/Zop/vAOZo5afM/LeoQvulOVeB82ANPujmiSSIwi6UTlOLCLm1l8j2A8sOOi5m7lI/HSUsM/iD1MeVMo" +
  "NHpUFYu6uIhnUbH2MyVTSo8yr6amUsgk3uS8rT4q26KLdaF6CGpld2c5c6+Bc98OKm/gMf7wd/4G0adCrEia2pqqtFFcUUEU" +
  "LSuIBcIRq9GtjObxi3/pP5w2i0X4TeenIkN6E74GOYnXIEo9rYTFOASMPm2dOhZY6nV0a9+O6eP9JS+1ss0iHvwehaQkP6Rv" +
  "LONKTn9gaoNUSppLQcTCQnnwyZkTj/3Uov5gv6O4QbnVdOo4hDJeDDroCqEVVYPm7J+4ewsJzJW5lsUzKTc/B68sNCxXY5Z0" +
  "yFpCZiFboe21B+Vw6i0X6BbpctBHjUMIv/knf223Gnk1hxnuYgEOyh0EdI8ewfdgvLzPZ/S76Cmvn//+X21rWs2QQKloZIA4" +
  "AalMkEp3orMI9ovf+Vu1U2GXfjOaHdCWTc1KxjfV0VQEwrVH2vohKayQiD/i3x7BOAYEt397YT4qWxsY3F7R1rashqNG57fs" +
  "h6A7igROx+RFdEhESi18zsbyXLJ5P7/Kx48ix6X5IG5n5/4s/ZUQHDwFmcave8+WfRZ/tOLQ88bGZupyRjj/MOPmtu66jn7W" +
  "uDoRNp87765MAlcQaY1WLwR9f+RTtFuRTayJf+pP/IndzUtb7TquN9Z56be3JSGxIWfFrucx1+vD5LxG2N1U1Qpp+fkf/BUA" +
  "VaAOQhcZ024WSc4mRv2ff+4/jfLbitU4xMgX3/z6gq8+3vd6E7n11mSt8Rrx3JJT7hR5fbChTxkvad73k3mTLFc5vg8a0lI7" +
  "+u2x9w6uWVVZiVZ99uVtmOjOTB5DY0O7q1ZMyMtwpMZ5azACd5O0KlNJeMiYZa8uynhUBbgHbCMlltSjz9dehrONKDcp0aJb" +
  "agqp540BcmZiPHddJEMQWKAvabcswpOcVN+XcC2oVuKQdTmpKn79T/4GUopzsrqmOb3iffZPwXlpPGu+ehPro9CIYOimPso3" +
  "H0DKZ1JX+j5+/vf+kjMQ/Ye/8zcfVn2/3XiN7mghFIvwTj/H/G41392GunDe+jyWv4hnNw9dcYnOur8p3pIN5NUOaEcpl7PM" +
  "hevo89XF6c196KTO8+5t6rKHyEckFCM61WQXkPjk0HCkgLJDhRIIGDVT+dgSb7QvfXK1VO9x2HWBqaqYsWVhP62qZlAuvU/+" +
  "uq/6wv1xxPESyr5Gs/BwhJCsTiQdKsQF8l4nkI0i5o4ukbTCFWrjg/rBmfjNf/I3ghvuKj/0dpJwMkEUj/DXmEK1jcaLcsTc" +
  "qTpjB0N9ptMkWfPmb7q++lN53wXWZrMdrcRDPl7x5ay+5DUwqBysG8m395wWa/DxTZWzC4WVdJKFUHeScwwCiJvLk5VHlBdY" +
  "m0iJljNo8dQOItCD6/bpkiqOlyTlPLkKXiocYB5cVy3Zbykxe1R30ebmi/aEEtvePKVw0O0pIA4OTVSxUW8RTvTAhL9/YxsY" +
  "D/+2+A3UgnBjUDxcb1ktRyyoRd8iHMR6g0pcY4y5dj4518PFR4UjJUTlJz/7ZVmVUyHKKMmqGehO2WU6LucaN9WjK0i5b+X0" +
  "wuACALJLJcVS0xbVCA3FA51GqELUoRV3LCoy5RLpPUiohKgVzVe71hgOiirGCGy1SYnsfLBKd4pCPziETTdu2kpW0hNdQUgN" +
  "MLRqD5Rq+jiOrDTR7ZypavVI9aadY/RY5qZH36FHwbEOmsi2iUw+Vi7pCV19Si4Uc50qJfMIjot40g7vKeARro/zkqpKIa4k" +
  "EqCw+kHFpld0saG5Hp519HNZOKNtUiTm0n1wXqS0OER++qs/SbCEdn0UpEiLBnUREbfNk95LxA4vMEmek5hNfTsIByTSSzy0" +
  "J4qaeZBV5TvkHFd/cDC6ATyOL++oubqR0iJl3d4TvEFPii6acRLtbJKsNcrCFlIiizlpHJQbyFYaIcRu6nVObmm5gUkkVe1v" +
  "Iz+2tPGYZCxU1wCvXNP0VsHV5hXR+wT2vMQPxV4iVE3ZaWMUYCXdN2Ok0A/0WiZ1Nc1n+VVFA9UNGsr5iknYY04ncBYowQri" +
  "zrIBSWZli8H9wYXsQdxxc43y2w+rHAZ+7iPkZ3/8Z9hRQlSqNdx2IYt9jPNY7EVnGY9cBXAl7pAeSx0AoTd95VFFLnrOdtDr" +
  "atbSvTNLdEhOdHaDL2SxUghUONKHSVYNqoSKOCnFrUKcXazDiMhS8nAkn1egBg/vW/tsaVzW07eJrmNrowpMXeHrMfiuMfoK" +
  "CKS+XGO3WxGYV1PDJGbPRQQ7Ba7XmWcAVAy0uZUVaC/WCj1qL4iQV00U9aSBu3GwQDxDxnYRos4OKmMKwkkDZAFkWXslwOVo" +
  "64yhcspgzRSm5k2bSur8MeVXfvLLCeoiFWJNecfMW+wRiOJE3K3DEdTJXsZmbbHjGJVKGERANMVoSQoPPVthVrzl7dHhLLMc" +
  "Ag7GcGO65Ug37Bt8bvR5LvLxwTu5Ld64t2nd3WNLrHWIBXfXo0Z2pRWXBgVJqrVWLg3qnJUFFTtl7GTZRJObyZtb9uHzlm3M" +
  "7c3HTn5o5BYvkqj9NeK2LyHrWFw8q7MJNpQPUHkHtcJCU4Z1u5RBhCNJdq8Jyyi0rEEdmFi9Rze3MNiRFE1JEJ5EByGejtxJ" +
  "KafuKeqnPmgVyc9++kX3kAeoKekBqcgpCijvD+8xulN6TC+So7OBXkNy1cjoMbfvqcFqkdHck7oX++jxOZHLXLPVDtJU4Cri" +
  "UqqlMgtOtMAP1jS1ah1dW8BjnJsuqfHQWnvp5El5xSS03N3Hln4yyru/VMqb6p6MFsuX+xFMJ+Qs+k7FcdBRk1BGkTorCK26" +
  "i+Yk2faSJrAJzo/+ONDwSIX1yhSvxQMqqmjiXaGuITcSC6hdSl8YVEJlLdCztEUbpLMrnds6i04jyrTFO3vbx/G6FwmXyPj2" +
  "lufWj4tY5Ge//KvXUKGbVbnXpFqMxlXOZ6mPPFMw9ENzFr1JfUMdvbNa+FlyCZX3m63LDt4tghSwMPWWOvZIY4cb976lpYcJ" +
  "OUtvtHXeMgdHXQkBgbfv0eI3JUPr9gTGF6MFZ35SkwWImGcxRqNA1bWE2tdmTvdJ8nH2SMSHCYexRvtCSlXg7ELJ0OJBqa2Q" +
  "kBLp2t71sKOo+RDh4SM5iPisqpbOLTFZnE5qtwllSlGaDj5SqLsOBkeVNGHsKO4iE6WIyoODgSISlSU5Zok8OVgkuhHFY7D8" +
  "9IdfFopUpv15m/OB0ekypMOaMwftK+buWymlu6B9wDqLWUVAgqykJWxXT+YdhEXxdLpsi/G8kGrKa1e8VLwV3JykOBm9uI31" +
  "EuJmEsIHjHkQ6Rlg9WCytB7RhEo0Z8A6XirqHA2DF5qjH5jOzTVZAqDkQewMbYF3PYccvec+et5ILc8oEYGpv8wmpVeUkS5y" +
  "DbgOIAXJWoF6u/j9EU2iXaneKSyhwUxEVNzDuzm9mMGEHWJYVXbk2qRF1pLNYBeVlqSYyy3STzpCmP5/o7kxC7IBWJEAAAAA" +
  "SUVORK5CYII=";
